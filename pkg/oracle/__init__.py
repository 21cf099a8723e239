# Brute-force oracle
from .search import SearchBudget, SearchResult, agreement_check, brute_force_hamilton, search_hamilton

__all__ = ["SearchBudget", "SearchResult", "brute_force_hamilton", "search_hamilton", "agreement_check"]
