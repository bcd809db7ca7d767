import pytest

from mushy import Face
from mushy.manufacture import manufacture

# Shared reference data set: unit thermal coefficients, mid-range mushy
# parameters, front position chosen first and the latent heat / face datum
# derived from it, so every solver must reproduce xi = 0.5 exactly.
XI_REF = 0.5
REF_KWARGS = dict(xi=XI_REF, k=1.0, rho=1.0, c=1.0, epsilon=0.5, gamma=0.1, q0=1.0)


@pytest.fixture(scope="session")
def convective_example():
    return manufacture(h0=2.0, **REF_KWARGS)


@pytest.fixture(scope="session")
def dirichlet_example():
    return manufacture(face=Face.DIRICHLET, **REF_KWARGS)
