"""Shared hypothesis strategies for braid words."""

from hypothesis import strategies as st

from braidpoly.braid import BraidWord

exponents = st.integers(min_value=1, max_value=4)


@st.composite
def family_words(draw, max_strands=4, max_exponent=4):
    n = draw(st.integers(min_value=2, max_value=max_strands))
    sign = draw(st.sampled_from([1, -1]))
    ms = [sign * draw(st.integers(min_value=1, max_value=max_exponent)) for _ in range(n - 1)]
    return BraidWord(n, tuple((i + 1, m) for i, m in enumerate(ms)))


@st.composite
def connected_words(draw):
    n = draw(st.integers(min_value=2, max_value=4))
    extra = draw(
        st.lists(
            st.tuples(
                st.integers(min_value=1, max_value=n - 1),
                st.sampled_from([1, -1, 2, -2]),
            ),
            max_size=4,
        )
    )
    base = [(i, draw(st.sampled_from([1, -1]))) for i in range(1, n)]
    return BraidWord(n, tuple(base + extra))


def corpus_words(max_strands=4, max_exponent=4):
    """Every homogeneous family word with the given bounds, both signs."""
    out = []
    for n in range(2, max_strands + 1):
        shapes = [[]]
        for _ in range(n - 1):
            shapes = [s + [m] for s in shapes for m in range(1, max_exponent + 1)]
        for shape in shapes:
            for sign in (1, -1):
                out.append(
                    BraidWord(n, tuple((i + 1, sign * m) for i, m in enumerate(shape)))
                )
    return out
