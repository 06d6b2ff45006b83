import numpy as np
from hypothesis import strategies as st

from trigreg.basis import Frequency, HypothesisSpace, Parity
from trigreg.functions import SpectralFunction


@st.composite
def spaces(draw, max_pairs=8, max_q=40):
    X = draw(st.floats(0.5, 1e4))
    Q = draw(st.lists(st.integers(1, max_q), min_size=1, max_size=max_pairs, unique=True))
    lams = draw(st.lists(st.floats(1e-2, 1e2), min_size=2 * len(Q), max_size=2 * len(Q)))
    return HypothesisSpace(X, tuple(Q), tuple(lams))


@st.composite
def functions_on(draw, X, max_terms=12, max_q=40):
    keys = draw(
        st.lists(st.tuples(st.integers(1, max_q), st.sampled_from(list(Parity))), max_size=max_terms, unique=True)
    )
    vals = draw(st.lists(st.floats(-10, 10, allow_nan=False), min_size=len(keys), max_size=len(keys)))
    return SpectralFunction(X, {Frequency(q, p): v for (q, p), v in zip(keys, vals)})


def random_space(rng, max_pairs=10, max_q=50, X=None):
    half = int(rng.integers(1, max_pairs + 1))
    Q = tuple(int(q) for q in rng.choice(np.arange(1, max_q + 1), half, replace=False))
    return HypothesisSpace(float(X if X is not None else rng.uniform(1, 100)), Q, tuple(rng.uniform(0.1, 5, 2 * half)))


def random_function(rng, X, n_terms=20, max_q=60):
    keys = set()
    while len(keys) < n_terms:
        keys.add((int(rng.integers(1, max_q + 1)), Parity.SIN if rng.random() < 0.5 else Parity.COS))
    return SpectralFunction(X, {Frequency(q, p): float(rng.normal()) for q, p in sorted(keys)})

