"""Chain test, affine-regularity certification, affine map solving."""

from fractions import Fraction

import pytest

from slopespectra import (
    AffineMap,
    EXACT,
    Point,
    apply_affine,
    convex_position_order,
    float_backend,
    is_affinely_regular,
    korchmaros_chain,
    normalize_to_regular,
    perturb,
    random_affine_map,
    regular_polygon,
    solve_affine_map,
)
from slopespectra.errors import (
    BackendMismatch,
    CollinearSource,
    NonInvertible,
    TooFewPoints,
)

from conftest import exact_config

F = Fraction


def ep(x, y):
    return Point(F(x), F(y))


class TestKorchmarosChain:
    def test_unit_square_cyclic(self):
        cfg = exact_config([(0, 0), (1, 0), (1, 1), (0, 1)])
        ok, j = korchmaros_chain(cfg.points, EXACT, cyclic=True)
        assert ok and j is None

    def test_regular_hexagon(self):
        cfg = regular_polygon(6)
        ok, _ = korchmaros_chain(cfg.points, cfg.backend, cyclic=True)
        assert ok

    def test_moved_vertex_fails_with_index(self):
        cfg = perturb(regular_polygon(6), 0.05, seed=1)
        ok, j = korchmaros_chain(cfg.points, cfg.backend, cyclic=True)
        assert not ok
        assert isinstance(j, int)

    def test_linear_mode_skips_wrap(self):
        # four consecutive vertices of a hexagon: only window j=0 applies and
        # it holds; the cyclic windows would fail
        hexagon = regular_polygon(6)
        pts = hexagon.points[:4]
        ok, _ = korchmaros_chain(pts, hexagon.backend, cyclic=False)
        assert ok
        ok_cyc, _ = korchmaros_chain(pts, hexagon.backend, cyclic=True)
        assert not ok_cyc

    def test_too_few(self):
        with pytest.raises(TooFewPoints):
            korchmaros_chain([ep(0, 0), ep(1, 0), ep(0, 1)], EXACT)


class TestIsAffinelyRegular:
    def test_regular_7gon(self):
        cert = is_affinely_regular(regular_polygon(7))
        assert cert.granted and cert.chain_ok
        assert not cert.conic.degenerate

    def test_sheared_7gon(self):
        shear = AffineMap(((1, 2), (0, 1)), (0, 0))
        cert = is_affinely_regular(apply_affine(regular_polygon(7), shear))
        assert cert.granted

    def test_vertex_pulled_to_center_fails(self):
        cfg = regular_polygon(7)
        coords = [tuple(p) for p in cfg.points]
        x, y = coords[3]
        coords[3] = (x / 2, y / 2)  # midpoint with the center
        from slopespectra import Configuration

        bad = Configuration.from_coords(coords, cfg.backend)
        # the pulled vertex is interior, or lands off the conic: not granted
        from slopespectra.errors import NotConvexPosition

        try:
            cert = is_affinely_regular(bad)
            assert not cert.granted
        except NotConvexPosition:
            pass

    def test_affine_invariance_of_verdict(self):
        from slopespectra import Configuration, random_convex_position

        for seed in range(6):
            cfg = random_convex_position(7, seed)
            T = random_affine_map(seed + 99)
            img = apply_affine(cfg, T)
            assert is_affinely_regular(cfg).granted == is_affinely_regular(img).granted

    def test_every_regular_mgon_certified(self):
        # every certificate also survives the numeric diagnostic
        for m in range(5, 25):
            cfg = regular_polygon(m)
            cert = is_affinely_regular(cfg)
            assert cert.granted
            pts = [cfg.points[i] for i in cert.order]
            _, residual = normalize_to_regular(pts, m, cfg.backend)
            assert residual <= 10 * cfg.backend.eps_rel


class TestSolveAffineMap:
    def test_identity(self):
        tri = [ep(0, 0), ep(1, 0), ep(0, 1)]
        T = solve_affine_map(tri, tri, EXACT)
        assert T.linear == ((1, 0), (0, 1)) and T.translation == (0, 0)

    def test_diagonal_scaling(self):
        src = [ep(0, 0), ep(1, 0), ep(0, 1)]
        dst = [ep(0, 0), ep(2, 0), ep(0, 3)]
        T = solve_affine_map(src, dst, EXACT)
        assert T.linear == ((2, 0), (0, 3)) and T.translation == (0, 0)

    def test_collinear_source(self):
        with pytest.raises(CollinearSource):
            solve_affine_map([ep(0, 0), ep(1, 1), ep(2, 2)],
                             [ep(0, 0), ep(1, 0), ep(0, 1)], EXACT)

    def test_collinear_destination_noninvertible(self):
        with pytest.raises(NonInvertible):
            solve_affine_map([ep(0, 0), ep(1, 0), ep(0, 1)],
                             [ep(0, 0), ep(1, 1), ep(2, 2)], EXACT)

    def test_roundtrip_exact(self):
        from slopespectra import SplitMix64

        rng = SplitMix64(23)
        for _ in range(25):
            src = [Point(rng.fraction(9), rng.fraction(9)) for _ in range(3)]
            dst = [Point(rng.fraction(9), rng.fraction(9)) for _ in range(3)]
            from slopespectra import orientation

            if orientation(*src, EXACT) == 0 or orientation(*dst, EXACT) == 0:
                continue
            T = solve_affine_map(src, dst, EXACT)
            for s, d in zip(src, dst):
                assert T.apply(s, EXACT) == d


class TestNormalizeToRegular:
    def test_affinely_regular_hexagon(self):
        shear = AffineMap(((3, 1), (0, F(1, 2))), (5, -2))
        cfg = apply_affine(regular_polygon(6), shear)
        order = convex_position_order(cfg)
        pts = [cfg.points[i] for i in order]
        _, residual = normalize_to_regular(pts, 6, cfg.backend)
        assert residual <= 1e-9

    def test_octagon_minus_vertex_gap_aware(self):
        from slopespectra import delete_vertices

        cfg = delete_vertices(regular_polygon(8), [0])
        order = convex_position_order(cfg)
        pts = [cfg.points[i] for i in order]
        # hull starts at the leftmost survivor; the deleted vertex sits four
        # steps later, so targets skip one index there
        _, residual = normalize_to_regular(pts, 8, cfg.backend,
                                           targets=[0, 1, 2, 3, 5, 6, 7])
        assert residual <= 1e-9

    def test_random_heptagon_large_residual(self):
        from slopespectra import Configuration, random_convex_position

        cfg = random_convex_position(7, 4)
        coords = [(float(p.x), float(p.y)) for p in cfg.points]
        fcfg = Configuration.from_coords(coords, float_backend())
        order = convex_position_order(fcfg)
        pts = [fcfg.points[i] for i in order]
        _, residual = normalize_to_regular(pts, 7, fcfg.backend)
        assert residual > 1e-6  # reported, not an error

    def test_exact_backend_refused(self):
        with pytest.raises(BackendMismatch):
            normalize_to_regular([ep(0, 0), ep(1, 0), ep(0, 1)], 5, EXACT)
