import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from predpac.bounds import (
    BoundSpec,
    corollary_bound,
    invert_bound,
    predictive_transform,
    vidyasagar_bound,
)
from predpac.errors import DomainError, Unreachable

unit = st.floats(1e-4, 0.999, allow_nan=False)


def _vid_real(d, delta, eps):
    return max(8 * d / eps * math.log2(8 * math.e / eps), 4 / eps * math.log2(2 / delta))


class TestClosedForms:
    def test_reference_values(self):
        assert vidyasagar_bound(1, 0.1, 0.1) == 622
        assert corollary_bound(1, 0.1, 0.2) == 622

    def test_hand_computed(self):
        # first term 8/0.5 * lg(16e) = 16 * 5.4427 = 87.08
        assert vidyasagar_bound(1, 0.5, 0.5) == 88
        assert vidyasagar_bound(1, 0.5, 0.5) == math.ceil(_vid_real(1, 0.5, 0.5))

    def test_confidence_term_dominates(self):
        # tiny delta: 4/0.5 * lg(2e30) exceeds the VC term
        assert vidyasagar_bound(1, 1e-30, 0.5) == math.ceil(8 * math.log2(2e30))

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_transform_identity_grid(self, d):
        for i in range(1, 11):
            for j in range(1, 11):
                delta, eps = i / 11, j / 11
                base = BoundSpec(d)
                assert predictive_transform(base, delta, eps) == corollary_bound(d, delta, eps)
                assert base.predictive(delta, eps) == BoundSpec(d, "corollary_predictive")(delta, eps)

    @given(st.integers(1, 20), unit, unit)
    def test_identity_property(self, d, delta, eps):
        assert predictive_transform(BoundSpec(d), delta, eps) == corollary_bound(d, delta, eps)

    @given(st.integers(1, 20), unit, unit, unit)
    def test_monotone(self, d, delta, e1, e2):
        lo, hi = sorted((e1, e2))
        assert vidyasagar_bound(d, delta, hi) <= vidyasagar_bound(d, delta, lo)
        assert corollary_bound(d, delta, hi) <= corollary_bound(d, delta, lo)
        assert vidyasagar_bound(d, lo, e1) >= vidyasagar_bound(d, hi, e1)
        assert vidyasagar_bound(d + 1, delta, e1) >= vidyasagar_bound(d, delta, e1)

    @given(st.integers(1, 20), unit, unit)
    def test_positive_integers(self, d, delta, eps):
        for v in (vidyasagar_bound(d, delta, eps), corollary_bound(d, delta, eps)):
            assert isinstance(v, int) and v >= 1

    def test_doubling_d_doubles_vc_term(self):
        eps, delta = 0.1, 0.5
        t1 = 8 / eps * math.log2(8 * math.e / eps)
        assert vidyasagar_bound(2, delta, eps) == math.ceil(2 * t1)
        assert vidyasagar_bound(1, delta, eps) == math.ceil(t1)

    @pytest.mark.parametrize("delta, eps", [(0, 0.1), (1, 0.1), (0.1, 0), (0.1, 1), (-0.5, 0.1), (0.1, float("nan"))])
    def test_domain_errors(self, delta, eps):
        with pytest.raises(DomainError):
            vidyasagar_bound(1, delta, eps)
        with pytest.raises(DomainError):
            corollary_bound(1, delta, eps)

    def test_bad_d(self):
        with pytest.raises(DomainError):
            vidyasagar_bound(0, 0.1, 0.1)
        with pytest.raises(ValueError):
            BoundSpec(1, "hoeffding")


class TestInvert:
    @given(st.integers(1, 5), st.floats(1e-6, 0.9), st.integers(50, 10**6))
    def test_round_trip(self, d, delta, n):
        spec = BoundSpec(d)
        try:
            eps = invert_bound(spec, delta, n)
        except Unreachable:
            assert spec(delta, 1 - 1e-9) > n
            return
        assert spec(delta, eps) <= n
        assert spec(delta, max(eps - 1e-9, 1e-12)) > n or eps <= 1e-9

    def test_strictly_decreasing(self):
        spec = BoundSpec(3, "corollary_predictive")
        values = [invert_bound(spec, 0.05, n) for n in (500, 1000, 2000, 10**4, 10**5)]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_unreachable(self):
        with pytest.raises(Unreachable):
            invert_bound(BoundSpec(1), 0.1, 5)
        with pytest.raises(DomainError):
            invert_bound(BoundSpec(1), 0.1, 0)
