import math

from hypothesis import strategies as st

from gamma3lab import TruncatedSeries


def assert_series_close(a: TruncatedSeries, b: TruncatedSeries, tol: float = 1e-12):
    assert a.order == b.order, f"orders differ: {a.order} vs {b.order}"
    for k, (ca, cb) in enumerate(zip(a.coeffs, b.coeffs)):
        assert abs(ca - cb) <= tol, f"coefficient {k}: {ca} vs {cb}"


def bounded_complex(radius: float = 1.0):
    return st.builds(
        complex,
        st.floats(-radius, radius, allow_nan=False),
        st.floats(-radius, radius, allow_nan=False),
    )


def disk_complex(radius: float = 0.95):
    """Complex numbers with modulus strictly below radius."""
    return st.builds(
        lambda r, t: complex(r * math.cos(t), r * math.sin(t)),
        st.floats(0.0, radius, exclude_max=True, allow_nan=False),
        st.floats(0.0, 2 * math.pi, allow_nan=False),
    )


def series_strategy(order: int = 5, radius: float = 1.0):
    return st.lists(
        bounded_complex(radius), min_size=order + 1, max_size=order + 1
    ).map(lambda cs: TruncatedSeries(tuple(cs)))


def normalized_series(order: int = 6, radius: float = 0.8):
    """Random series with f(0) = 0 and f'(0) = 1."""
    return st.lists(
        bounded_complex(radius), min_size=order - 1, max_size=order - 1
    ).map(lambda cs: TruncatedSeries((0.0, 1.0) + tuple(cs)))
