"""renalchain: donor-kidney transport ledger with an embedded viability monitor.

A multi-node proof-of-work blockchain records signed custody/health events
for donor kidneys; every event is scored by a from-scratch random forest
trained on the chronic-kidney-disease schema, and scores below the
configured threshold raise a red flag on the ledger.
"""

__version__ = "0.1.0"

from .kernels import BACKEND as KERNEL_BACKEND

__all__ = ["KERNEL_BACKEND", "__version__"]
