import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from girthspec import (
    BipartiteGraph,
    NumericalError,
    Route,
    RouteInapplicableError,
    SizeCapError,
    adjacency_spectrum,
    brute_force_counts,
    complete_bipartite,
    complete_bipartite_closed_form,
    counts_from_spectrum,
    derive_edge_spectrum,
    edge_spectrum_direct,
    even_cycle,
    g_plus_4_cross_check,
    profile,
    random_biregular,
    tesseract,
    trace_power_counts,
    tree_walk_count,
)
from girthspec.edge_matrix import EdgeSpectrum
from girthspec.spectral_transfer import TransferParameters

from conftest import biregular_girth6_graphs, random_bipartite


def transfer_counts(g, prof=None):
    spec = adjacency_spectrum(g)
    params = TransferParameters.from_graph(g, spec, prof)
    es = derive_edge_spectrum(spec, params)
    girth = profile(g).girth if prof is None else prof.girth
    return counts_from_spectrum(es, girth)


class TestCountsFromSpectrum:
    @pytest.mark.parametrize("m,n", [(2, 3), (3, 4), (5, 5), (6, 3)])
    def test_complete_bipartite_closed_forms(self, m, n):
        cc = transfer_counts(complete_bipartite(m, n))
        assert cc.counts[4] == (m - 1) * (n - 1) * m * n // 4
        assert cc.counts[6] == m * (m - 1) * (m - 2) * n * (n - 1) * (n - 2) // 6
        assert all(r < 1e-4 for r in cc.residuals.values())

    def test_tesseract_displayed_computation(self):
        # (2*3^4 + 8(-1+2sqrt2 i)^2 + 8(-1-2sqrt2 i)^2 + 12*3^2 + 34) / 8 = 24
        s = 2 * math.sqrt(2)
        total = (2 * 3 ** 4 + 8 * complex(-1, s) ** 2 + 8 * complex(-1, -s) ** 2
                 + 12 * 3 ** 2 + 34)
        assert round(total.real / 8) == 24
        assert transfer_counts(tesseract()).counts[4] == 24

    def test_rejects_k_beyond_window(self):
        es = edge_spectrum_direct(complete_bipartite(3, 3))
        with pytest.raises(RouteInapplicableError):
            counts_from_spectrum(es, girth=4, max_k=8)

    def test_residual_gate(self):
        # a spectrum that cannot produce integers: single eigenvalue pair
        es = EdgeSpectrum(eigenvalues=((complex(1.1), 1), (complex(-1.1), 1)), total=2)
        with pytest.raises(NumericalError, match="residual"):
            counts_from_spectrum(es, girth=4, max_k=4)

    def test_route_annotation(self):
        cc = transfer_counts(complete_bipartite(3, 4))
        assert cc.route is Route.SPECTRAL_TRANSFER


class TestBruteForce:
    def test_six_cycle(self):
        cc = brute_force_counts(even_cycle(6), max_k=10)
        assert cc.girth == 6
        assert cc.counts == {6: 1, 8: 0, 10: 0}

    def test_k23(self):
        assert brute_force_counts(complete_bipartite(2, 3), max_k=4).counts[4] == 3

    def test_tesseract(self):
        assert brute_force_counts(tesseract(), max_k=4).counts[4] == 24

    def test_valid_beyond_two_g(self):
        # K_{2,2} has girth 4; brute force is allowed past 2g-2
        cc = brute_force_counts(complete_bipartite(2, 2), max_k=8)
        assert cc.counts == {4: 1, 6: 0, 8: 0}

    def test_size_cap(self):
        with pytest.raises(SizeCapError):
            brute_force_counts(complete_bipartite(3, 3), max_k=4, edge_cap=5)

    def test_refuses_forest(self):
        with pytest.raises(RouteInapplicableError):
            brute_force_counts(BipartiteGraph.from_edges(2, 1, [(0, 0), (1, 0)]),
                               max_k=4)

    def test_agrees_with_trace_on_random_graphs(self):
        rng = random.Random(6)
        for _ in range(15):
            g = random_bipartite(rng)
            tr = trace_power_counts(g)
            br = brute_force_counts(g, max_k=max(tr.counts))
            assert {k: br.counts[k] for k in tr.counts} == tr.counts


class TestClosedForm:
    def test_small_cases(self):
        assert complete_bipartite_closed_form(3, 4, 4) == 18
        assert complete_bipartite_closed_form(2, 2, 4) == 1
        assert complete_bipartite_closed_form(2, 2, 6) == 0

    def test_unsupported_k(self):
        with pytest.raises(ValueError):
            complete_bipartite_closed_form(3, 3, 8)

    @given(st.integers(1, 8), st.integers(1, 8))
    @settings(max_examples=30)
    def test_matches_brute_force(self, m, n):
        g = complete_bipartite(m, n)
        if profile(g).girth is None:
            assert complete_bipartite_closed_form(m, n, 4) == 0
            return
        cc = brute_force_counts(g, max_k=6)
        assert cc.counts.get(4, 0) == complete_bipartite_closed_form(m, n, 4)
        assert cc.counts.get(6, 0) == complete_bipartite_closed_form(m, n, 6)


class TestTreeWalkCount:
    @given(st.integers(1, 6), st.integers(1, 6))
    def test_length_two(self, d1, d2):
        assert tree_walk_count(d1, d2, 2) == d1

    @given(st.integers(1, 6), st.integers(1, 6))
    def test_length_four_by_hand(self, d1, d2):
        # depth profiles (0,1,2,1,0) and (0,1,0,1,0)
        assert tree_walk_count(d1, d2, 4) == d1 * (d2 - 1) + d1 * d1

    def test_odd_length_zero(self):
        assert tree_walk_count(3, 4, 5) == 0

    def test_length_zero(self):
        assert tree_walk_count(3, 4, 0) == 1

    def test_trace_identity_on_high_girth_graphs(self):
        # tr(A^l) = n*S(dv,dc,l) + m*S(dc,dv,l) whenever girth > l
        for g, prof in biregular_girth6_graphs(6):
            spec = adjacency_spectrum(g)
            for ell in range(2, prof.girth, 2):
                expect = (g.left_count * tree_walk_count(prof.d_v, prof.d_c, ell)
                          + g.right_count * tree_walk_count(prof.d_c, prof.d_v, ell))
                assert round(spec.power_sum(ell)) == expect
                assert abs(spec.power_sum(ell) - expect) < 1e-6 * max(1, expect)


class TestGPlus4CrossCheck:
    def test_agrees_with_spectral_route(self):
        for g, prof in biregular_girth6_graphs(8):
            cc = transfer_counts(g, prof)
            assert g_plus_4_cross_check(g, adjacency_spectrum(g), cc) == \
                cc.counts[prof.girth + 4]

    def test_refuses_girth_four(self):
        g = complete_bipartite(3, 4)
        cc = transfer_counts(g)
        with pytest.raises(RouteInapplicableError, match="girth"):
            g_plus_4_cross_check(g, adjacency_spectrum(g), cc)

    def test_needs_lower_counts(self):
        for g, prof in biregular_girth6_graphs(1):
            cc = transfer_counts(g, prof)
            partial = type(cc)(girth=cc.girth, counts={prof.girth: cc.counts[prof.girth]},
                               route=cc.route)
            with pytest.raises(RouteInapplicableError, match="N_g"):
                g_plus_4_cross_check(g, adjacency_spectrum(g), partial)


class TestRouteAgreement:
    def test_all_routes_identical_on_biregular(self):
        cases = [(6, 4, 2, 3, 0), (8, 6, 3, 4, 1), (8, 8, 4, 4, 2)]
        for n, m, dv, dc, seed in cases:
            g = random_biregular(n, m, dv, dc, seed=seed)
            prof = profile(g)
            a = transfer_counts(g, prof).counts
            b = trace_power_counts(g).counts
            c = counts_from_spectrum(edge_spectrum_direct(g), prof.girth,
                                     route=Route.DIRECT_EDGE_SPECTRUM).counts
            d = brute_force_counts(g, max_k=max(a)).counts
            assert a == b == c == {k: d[k] for k in a}

    def test_girth_count_positive(self):
        rng = random.Random(7)
        for _ in range(10):
            g = random_bipartite(rng)
            cc = trace_power_counts(g)
            assert cc.counts[cc.girth] >= 1
