from hypothesis import strategies as st

from cauchyschur.poly import Poly, VarContext

SMALL = VarContext(["x1", "x2", "y1"])


@st.composite
def small_polys(draw, ctx=SMALL, max_terms=5, max_exp=3):
    monos = draw(st.lists(
        st.tuples(*[st.integers(0, max_exp) for _ in range(len(ctx))]),
        max_size=max_terms))
    coeffs = draw(st.lists(st.integers(-5, 5), min_size=len(monos), max_size=len(monos)))
    return Poly(ctx, dict(zip(monos, coeffs)))


@st.composite
def partitions(draw, n, max_part=4):
    parts = draw(st.lists(st.integers(0, max_part), min_size=n, max_size=n))
    return tuple(sorted(parts, reverse=True))
