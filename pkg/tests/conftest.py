from __future__ import annotations

from hypothesis import settings

# Property tests must be reproducible run to run; example counts stay small
# because every case drives dense linear algebra.
settings.register_profile("deterministic", derandomize=True, deadline=None)
settings.load_profile("deterministic")
