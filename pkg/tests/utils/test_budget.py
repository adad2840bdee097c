"""
Tests for search budgets
"""

import pytest

from src.utils.budget import SearchBudget, resolve_budget
from src.utils.error_handler import BudgetExhausted


class TestSearchBudget:
    """Test node and time limits"""

    def test_unlimited(self):
        """Should never raise without limits"""
        budget = SearchBudget.unlimited("walk")
        budget.tick(10_000)
        assert budget.nodes == 10_000
        assert not budget.is_limited

    def test_node_limit(self):
        """Should raise once the node count passes the limit"""
        budget = SearchBudget(max_nodes=3, operation_name="walk")
        budget.tick()
        budget.tick(2)
        with pytest.raises(BudgetExhausted) as exc:
            budget.tick()
        assert "walk" in str(exc.value)
        assert exc.value.details["nodes"] == 4

    def test_time_limit(self):
        """Should raise after the deadline at a clock check"""
        budget = SearchBudget(time_ms=1)
        budget._deadline = 0.0
        with pytest.raises(BudgetExhausted):
            for _ in range(1024):
                budget.tick()

    @pytest.mark.parametrize("kwargs", [{"time_ms": 0}, {"max_nodes": 0}, {"max_nodes": -5}])
    def test_rejects_nonpositive(self, kwargs):
        """Should reject non-positive limits"""
        with pytest.raises(ValueError):
            SearchBudget(**kwargs)

    def test_resolve(self):
        """Should pass a budget through or create an unlimited one"""
        budget = SearchBudget(max_nodes=5)
        assert resolve_budget(budget, "x") is budget
        fresh = resolve_budget(None, "treewidth")
        assert fresh.operation_name == "treewidth"
        assert not fresh.is_limited
