from __future__ import annotations

"""featsel: multi-objective wrapper feature selection package"""

__version__ = "0.1.0"
