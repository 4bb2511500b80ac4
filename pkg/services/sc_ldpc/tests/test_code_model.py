"""Test suite for the code model: parameters, H_s <-> H(x) conversion, window expansion."""
import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "../../..")))

from fractions import Fraction

import numpy as np
import pytest
from services.sc_ldpc.code_model import derive_params, expand_window, hs_to_poly, poly_to_hs
from services.sc_ldpc.errors import EmptyMatrixError, InvalidParamsError, NonCanonicalError
from services.sc_ldpc.io import read_code
from services.sc_ldpc.models import CodeParams, PolyMatrix, SyndromeFormer
from services.sc_ldpc.validator import validate_supports

SAMPLES = os.path.abspath(os.path.join(os.path.dirname(__file__), "../../../data/samples"))


def random_hs(rng, max_a=6, max_c=4, max_L=20, max_w=4):
    a = int(rng.integers(2, max_a + 1))
    c = int(rng.integers(1, min(max_c, a - 1) + 1))
    L = int(rng.integers(c + 1, max_L + 1))
    rows = []
    for _ in range(a):
        w = int(rng.integers(1, min(max_w, L) + 1))
        rows.append(sorted(int(j) for j in rng.choice(L, size=w, replace=False)))
    return SyndromeFormer.from_supports(rows, c=c)


def random_poly(rng, max_c=4, max_a=6, max_exp=6):
    c = int(rng.integers(1, max_c + 1))
    a = int(rng.integers(c + 1, max_a + 1))
    entries = [[() for _ in range(a)] for _ in range(c)]
    for j in range(a):
        while all(not entries[i][j] for i in range(c)):
            for i in range(c):
                k = int(rng.integers(0, 3))
                entries[i][j] = tuple(sorted(int(e) for e in rng.choice(max_exp + 1, size=k, replace=False)))
    return PolyMatrix(c=c, a=a, entries=tuple(tuple(r) for r in entries))


class TestDeriveParams:
    """m_h, v_s and R from (a, c, L_h)."""

    def test_reference_rate_half(self):
        """Reference code of rate 1/2."""
        assert derive_params(6, 3, 258) == (85, 516, Fraction(1, 2))

    def test_reference_rate_two_fifths(self):
        """Found code of rate 2/5."""
        assert derive_params(5, 3, 159) == (52, 265, Fraction(2, 5))

    def test_single_block(self):
        """L_h <= c gives m_h = 0."""
        assert derive_params(2, 1, 1) == (0, 2, Fraction(1, 2))

    @pytest.mark.parametrize("a,c,L_h", [(3, 3, 5), (2, 3, 5), (0, 1, 3), (4, 2, 0)])
    def test_invalid(self, a, c, L_h):
        """a <= c, a = 0 and L_h = 0 are rejected."""
        with pytest.raises(InvalidParamsError):
            derive_params(a, c, L_h)

    def test_rate_is_exact(self):
        """Rate stays a Fraction."""
        params = CodeParams(a=6, c=4, L_h=10, row_weights=(2,) * 6)
        assert params.rate == Fraction(1, 3)
        assert params.m_h == 2
        assert params.v_s == 18


class TestSyndromeFormer:
    """Construction and validation of H_s."""

    def test_tight_width_by_default(self):
        """L_h defaults to the largest index + 1."""
        hs = SyndromeFormer.from_supports([(0, 1), (0, 3)], c=1)
        assert hs.L_h == 4
        assert hs.m_h == 3

    def test_non_canonical_is_rejected(self):
        """An empty last block is flagged, not repaired."""
        with pytest.raises(NonCanonicalError):
            SyndromeFormer.from_supports([(0, 1), (0, 2)], c=1, L_h=5)

    def test_empty_row_is_rejected(self):
        """Every variable needs a check."""
        with pytest.raises(InvalidParamsError):
            SyndromeFormer.from_supports([(0, 1), ()], c=1, L_h=2)

    def test_validator_reports_every_problem(self):
        """All row errors are collected."""
        report = validate_supports(3, 1, 4, [(0, 5), (2, 2), ()])
        assert not report["is_valid"]
        assert len(report["errors"]) == 3

    def test_weight_one_warning(self):
        """Weight-1 rows only warn."""
        report = validate_supports(2, 1, 2, [(0,), (1,)])
        assert report["is_valid"]
        assert report["warnings"]

    def test_to_dense(self):
        """Dense a x L_h view."""
        hs = SyndromeFormer.from_supports([(0, 2), (1, 2)], c=1)
        assert hs.to_dense().tolist() == [[1, 0, 1], [0, 1, 1]]


class TestConversion:
    """hs_to_poly / poly_to_hs."""

    def test_single_row_c1(self):
        """1 + x from one row on one level."""
        hs = SyndromeFormer.from_supports([(0, 1)], c=1)
        poly = hs_to_poly(hs)
        assert poly.entries == (((0, 1),),)
        assert poly.formatted() == (("1 + x",),)

    def test_single_row_c2(self):
        """Columns split over two levels."""
        hs = SyndromeFormer.from_supports([(0, 3)], c=2)
        assert hs_to_poly(hs).entries == (((0,),), ((1,),))

    def test_poly_to_hs_c1(self):
        """Inverse expansion on one level."""
        poly = PolyMatrix(c=1, a=1, entries=(((0, 1),),))
        assert poly_to_hs(poly).supports == ((0, 1),)

    @pytest.mark.parametrize(
        "name,a,L_h,m_h",
        [
            ("bocharova.hx", 6, 258, 85),
            ("bocharova_found.hx", 6, 117, 38),
            ("zhou.hx", 5, 558, 185),
            ("zhou_found.hx", 5, 159, 52),
        ],
    )
    def test_printed_matrices(self, name, a, L_h, m_h):
        """The four sample H(x) expand to the published widths."""
        poly = read_code(os.path.join(SAMPLES, name))
        hs = poly_to_hs(poly)
        assert (hs.a, hs.c, hs.L_h, hs.m_h) == (a, 3, L_h, m_h)
        assert poly.max_exponent == hs.m_h
        assert hs_to_poly(hs) == poly

    def test_formatted_monomial(self):
        """Pretty-printed exponents."""
        poly = read_code(os.path.join(SAMPLES, "bocharova_found.hx"))
        assert poly.formatted()[0][1] == "x^33"
        assert poly.formatted()[0][0] == "1"

    def test_null_term_formatting(self):
        """Null entries print as 0."""
        poly = PolyMatrix(c=2, a=3, entries=(((0,), (), (1, 4)), ((2,), (0,), ())))
        assert poly.formatted() == (("1", "0", "x + x^4"), ("x^2", "1", "0"))

    def test_all_null_matrix(self):
        """H(x) without ones is rejected."""
        with pytest.raises(EmptyMatrixError):
            poly_to_hs(PolyMatrix(c=1, a=2, entries=(((), ()),)))

    def test_repeated_exponent(self):
        """Duplicate exponents are rejected."""
        with pytest.raises(InvalidParamsError):
            PolyMatrix(c=1, a=2, entries=(((0, 0), (1,)),))

    def test_round_trip_random_hs(self):
        """H_s -> H(x) -> H_s with L_h given back."""
        rng = np.random.default_rng(7)
        for _ in range(1000):
            hs = random_hs(rng)
            poly = hs_to_poly(hs)
            assert poly.max_exponent == hs.m_h
            assert poly_to_hs(poly, L_h=hs.L_h) == hs

    def test_round_trip_pads_the_last_block(self):
        """Without L_h the width rounds up to a multiple of c, supports unchanged."""
        hs = SyndromeFormer.from_supports([(0, 4), (1, 3)], c=2)
        assert hs.L_h == 5
        back = poly_to_hs(hs_to_poly(hs))
        assert (back.L_h, back.m_h) == (6, 2)
        assert back.supports == hs.supports
        assert poly_to_hs(hs_to_poly(hs), L_h=5) == hs

    def test_round_trip_random_poly(self):
        """H(x) -> H_s -> H(x)."""
        rng = np.random.default_rng(11)
        for _ in range(1000):
            poly = random_poly(rng)
            assert hs_to_poly(poly_to_hs(poly)) == poly


class TestExpandWindow:
    """Leading corner of the semi-infinite parity-check matrix."""

    def test_hand_tiling(self):
        """3-block window written out by hand."""
        hs = SyndromeFormer.from_supports([(0, 1), (0, 2)], c=1)
        window = expand_window(hs, 3)
        assert window.shape == (3, 6)
        assert window.matrix.toarray().tolist() == [
            [1, 1, 0, 0, 0, 0],
            [1, 0, 1, 1, 0, 0],
            [0, 1, 1, 0, 1, 1],
        ]

    def test_single_block_is_h0(self):
        """W = 1 keeps H_0 only."""
        hs = SyndromeFormer.from_supports([(0, 4), (1, 2), (2, 5)], c=2)
        dense = expand_window(hs, 1).matrix.toarray()
        assert dense.tolist() == [[1, 0, 0], [0, 1, 0]]

    def test_monotonic_in_width(self):
        """A window is the corner of any wider one."""
        rng = np.random.default_rng(3)
        for _ in range(50):
            hs = random_hs(rng)
            for W in (1, 2, hs.m_h + 2):
                small = expand_window(hs, W).matrix.toarray()
                large = expand_window(hs, W + 1).matrix.toarray()
                assert (large[: hs.c * W, : hs.a * W] == small).all()

    def test_full_block_column_sums(self):
        """Block 0 columns carry the row weights."""
        rng = np.random.default_rng(5)
        for _ in range(50):
            hs = random_hs(rng)
            W = 2 * (hs.m_h + 1)
            window = expand_window(hs, W)
            sums = np.asarray(window.matrix.sum(axis=0)).ravel()
            weights = [len(r) for r in hs.supports]
            assert sums[: hs.a].tolist() == weights
            assert window.nnz <= W * sum(weights)

    def test_replicated_region_ones_count(self):
        """The first W - m_h column blocks hold every one of their H_s copy."""
        rng = np.random.default_rng(29)
        for _ in range(200):
            hs = random_hs(rng)
            weights = sum(len(r) for r in hs.supports)
            for W in (hs.m_h + 1, hs.m_h + 2, 3 * (hs.m_h + 1)):
                window = expand_window(hs, W)
                full = W - hs.m_h
                assert window.matrix.tocsc()[:, : hs.a * full].nnz == full * weights
                assert full * weights <= window.nnz <= W * weights

    def test_invalid_width(self):
        """W = 0 is rejected."""
        hs = SyndromeFormer.from_supports([(0, 1), (0, 2)], c=1)
        with pytest.raises(InvalidParamsError):
            expand_window(hs, 0)


if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])
