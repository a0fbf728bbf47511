class BudgetError(Exception):
    """A requested computation exceeds the configured memory or enumeration budget."""
