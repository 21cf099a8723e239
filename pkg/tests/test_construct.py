import random
import unittest

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from core import (
    ASequenceLengthError,
    ASequenceOrderError,
    ASequenceRangeError,
    ASequenceResidueError,
    ConstructionIntegrityError,
    Layer,
    ParityError,
    SkipError,
    Vertex,
    adjacent,
    label,
    layer_filter,
    layer_vertices,
    make_graph,
    make_params,
    valid_t_values,
)
from construct import (
    ASequence,
    build_cycle,
    canonical_a_sequence,
    canonical_ids,
    cycle_ids,
    even_cycle_ids,
    even_hamilton,
    even_ladder_path,
    even_ladder_paths,
    glue,
    hamilton_cycle,
    joining_order,
    odd_cycle_ids,
    odd_hamilton,
    odd_path_system,
    path_P,
    path_Q,
    path_R,
    path_S,
    random_a_sequence,
    validate_a_sequence,
)
from verify import verify_hamilton

X, U, V, Y = Layer.X, Layer.U, Layer.V, Layer.Y


def _labels(path) -> str:
    return " ".join(label(v) for v in path)


def _odd_pairs(n_max: int) -> list[tuple[int, int]]:
    return [(n, t) for n in range(3, n_max + 1, 2) for t in valid_t_values(n)]


@st.composite
def odd_graph_with_a_sequence(draw, n_max: int = 99):
    n = draw(st.integers(min_value=3, max_value=n_max).filter(lambda v: v % 2 == 1))
    t = draw(st.integers(min_value=1, max_value=(n - 1) // 2))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    params = make_params(n, t)
    return make_graph(n, t), random_a_sequence(params, random.Random(seed))


PROPERTY_SETTINGS = settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])


class TestEvenLadder(unittest.TestCase):
    """Tests for the even-n ladder construction."""

    def test_first_ladder_path(self):
        """DP(4,1), i=0 gives U_0 X_0 X_1 U_1 V_0 Y_0 Y_1 V_1 U_2."""
        path = even_ladder_path(make_graph(4, 1), 0)
        self.assertEqual(_labels(path), "u0 x0 x1 u1 v0 y0 y1 v1 u2")

    def test_second_ladder_path(self):
        """DP(4,1), i=1 wraps back to U_0."""
        path = even_ladder_path(make_graph(4, 1), 1)
        self.assertEqual(_labels(path), "u2 x2 x3 u3 v2 y2 y3 v3 u0")

    def test_consecutive_paths_share_endpoints(self):
        """Path i starts where path i-1 ends, and the ladders are otherwise disjoint."""
        g = make_graph(12, 5)
        paths = even_ladder_paths(g)
        for prev, path in zip(paths, paths[1:] + paths[:1]):
            self.assertEqual(path.start, prev.end)
        interiors = [set(p.vertices[1:]) for p in paths]
        for i, a in enumerate(interiors):
            for b in interiors[i + 1:]:
                self.assertFalse(a & b)

    def test_even_hamilton_verifies(self):
        for n, t in [(4, 1), (6, 2), (8, 3), (10, 4)]:
            g = make_graph(n, t)
            cycle = even_hamilton(g)
            self.assertEqual(len(cycle), 4 * n)
            self.assertTrue(verify_hamilton(g, cycle.vertices).ok, f"DP({n},{t})")

    def test_rejects_odd_n(self):
        with self.assertRaises(ParityError):
            even_ladder_path(make_graph(7, 3), 0)
        with self.assertRaises(ParityError):
            even_hamilton(make_graph(7, 3))


class TestASequence(unittest.TestCase):
    """Tests for a-sequence construction and validation."""

    def test_canonical_k1(self):
        """n=9, t=3 gives [0, 4, 2]."""
        self.assertEqual(canonical_a_sequence(make_params(9, 3)).as_list(), [0, 4, 2])

    def test_canonical_k0(self):
        self.assertEqual(canonical_a_sequence(make_params(7, 3)).as_list(), [0])

    def test_canonical_k2(self):
        """n=25, t=5 gives [0, 6, 2, 8, 4]."""
        a = canonical_a_sequence(make_params(25, 5))
        self.assertEqual(a.as_list(), [0, 6, 2, 8, 4])
        self.assertEqual(validate_a_sequence(make_params(25, 5), a), a)

    def test_canonical_rejects_even_n(self):
        with self.assertRaises(ParityError):
            canonical_a_sequence(make_params(8, 3))

    def test_subscripts_wrap(self):
        a = ASequence((0, 4, 2), k=1)
        self.assertEqual(a[3], 0)
        self.assertEqual(a[4], 4)
        self.assertEqual(a[-1], 2)

    def test_accepts_canonical_instance(self):
        params = make_params(9, 3)
        self.assertEqual(validate_a_sequence(params, [0, 4, 2]).as_list(), [0, 4, 2])

    def test_order_violation(self):
        """[0, 2, 4]: a_2 = 4 must come before a_1."""
        with self.assertRaises(ASequenceOrderError):
            validate_a_sequence(make_params(9, 3), [0, 2, 4])

    def test_order_violation_with_valid_residues(self):
        """[0, 4, 5] has the right residues but a_2 > a_1."""
        with self.assertRaises(ASequenceOrderError):
            validate_a_sequence(make_params(9, 3), [0, 4, 5])

    def test_residue_violation(self):
        """[0, 4, 3]: 3 is not congruent to 2 mod 3."""
        with self.assertRaises(ASequenceResidueError):
            validate_a_sequence(make_params(9, 3), [0, 4, 3])

    def test_length_violation(self):
        with self.assertRaises(ASequenceLengthError):
            validate_a_sequence(make_params(9, 3), [0, 4])

    def test_range_violation(self):
        with self.assertRaises(ASequenceRangeError):
            validate_a_sequence(make_params(9, 3), [0, 4, 11])
        with self.assertRaises(ASequenceRangeError):
            validate_a_sequence(make_params(9, 3), [-3, 4, 2])

    def test_random_sequences_validate(self):
        rng = random.Random(7)
        for n, t in _odd_pairs(45):
            params = make_params(n, t)
            for _ in range(3):
                a = random_a_sequence(params, rng)
                self.assertEqual(validate_a_sequence(params, a), a)

    def test_random_sequences_vary(self):
        """Large n leaves room for non-canonical choices."""
        params = make_params(99, 9)
        rng = random.Random(1)
        seen = {tuple(random_a_sequence(params, rng).entries) for _ in range(20)}
        self.assertGreater(len(seen), 1)


class TestOddPaths(unittest.TestCase):
    """Tests for the P, Q, R, S paths."""

    def test_p_full_rim_when_gcd_is_one(self):
        g = make_graph(7, 3)
        a = canonical_a_sequence(g.params)
        self.assertEqual(_labels(path_P(g, a, 0)), "u3 x3 x4 x5 x6 x0 x1 x2 u2")

    def test_p_short_run(self):
        g = make_graph(9, 3)
        a = validate_a_sequence(g.params, [0, 4, 2])
        self.assertEqual(_labels(path_P(g, a, 0)), "u3 x3 x4 u4")

    def test_q_full_rim_when_gcd_is_one(self):
        g = make_graph(7, 3)
        a = canonical_a_sequence(g.params)
        self.assertEqual(_labels(path_Q(g, a, 0)), "v0 y0 y1 y2 y3 y4 y5 y6 v6")

    def test_q_wraps(self):
        """Q_1 of DP(9,3) runs (0 - 4) mod 9 = 5 rim steps."""
        g = make_graph(9, 3)
        a = validate_a_sequence(g.params, [0, 4, 2])
        self.assertEqual(_labels(path_Q(g, a, 1)), "v4 y4 y5 y6 y7 y8 v8")

    def test_q_is_p_shape_on_other_rim(self):
        g = make_graph(15, 5)
        a = canonical_a_sequence(g.params)
        for i in range(a.modulus):
            p, q = path_P(g, a, i), path_Q(g, a, i)
            self.assertEqual(len(p), len(q))
            self.assertEqual([v.index for v in q], [(v.index - g.t) % g.n for v in p])

    def test_p_endpoints_are_u(self):
        g = make_graph(21, 9)
        a = canonical_a_sequence(g.params)
        for i in range(a.modulus):
            path = path_P(g, a, i)
            self.assertIs(path.start.layer, U)
            self.assertIs(path.end.layer, U)

    def test_r_short(self):
        g = make_graph(9, 3)
        a = validate_a_sequence(g.params, [0, 4, 2])
        self.assertEqual(_labels(path_R(g, a, 0)), "u6 v0")

    def test_r_long(self):
        g = make_graph(7, 3)
        a = canonical_a_sequence(g.params)
        self.assertEqual(_labels(path_R(g, a, 0)), "u2 v5 u1 v4 u0 v3 u6 v2 u5 v1 u4 v0")

    def test_s_short(self):
        g = make_graph(9, 3)
        a = validate_a_sequence(g.params, [0, 4, 2])
        self.assertEqual(_labels(path_S(g, a, 0)), "v3 u0 v6 u3")

    def test_s_stops_at_first_hit(self):
        g = make_graph(7, 3)
        a = canonical_a_sequence(g.params)
        self.assertEqual(_labels(path_S(g, a, 0)), "v6 u3")

    def test_inner_walks_stay_in_residue_class(self):
        g = make_graph(45, 15)
        a = canonical_a_sequence(g.params)
        m = a.modulus
        for i in range(m):
            for path in (path_R(g, a, i), path_S(g, a, i)):
                self.assertEqual({v.index % m for v in path}, {i})

    def test_r_and_q_share_nothing(self):
        """Read literally, R_i and Q_i are disjoint too."""
        g = make_graph(25, 10)
        a = canonical_a_sequence(g.params)
        for i in range(a.modulus):
            self.assertFalse(set(path_R(g, a, i)) & set(path_Q(g, a, i)))

    def test_paths_reject_even_n(self):
        g = make_graph(8, 3)
        a = ASequence((0,), k=0)
        for fn in (path_P, path_Q, path_R, path_S):
            with self.assertRaises(ParityError):
                fn(g, a, 0)

    def test_joining_order_k1(self):
        a = ASequence((0, 4, 2), k=1)
        self.assertEqual(
            joining_order(a),
            [("S", 0), ("P", 0), ("R", 1), ("Q", 1), ("S", 2), ("P", 2),
             ("R", 0), ("Q", 0), ("S", 1), ("P", 1), ("R", 2), ("Q", 2)],
        )

    def test_junctions_line_up(self):
        g = make_graph(9, 3)
        a = validate_a_sequence(g.params, [0, 4, 2])
        system = odd_path_system(g, a)
        paths = [system[key] for key in joining_order(a)]
        self.assertEqual(len(glue(paths)), 36)


class TestOddHamilton(unittest.TestCase):
    """Tests for the odd-n Hamilton cycle."""

    def test_dp_7_3(self):
        g = make_graph(7, 3)
        cycle = odd_hamilton(g, canonical_a_sequence(g.params))
        self.assertEqual(len(cycle), 28)
        self.assertTrue(verify_hamilton(g, cycle.vertices).ok)

    def test_dp_9_3(self):
        g = make_graph(9, 3)
        cycle = odd_hamilton(g, [0, 4, 2])
        self.assertEqual(len(cycle), 36)
        self.assertTrue(verify_hamilton(g, cycle.vertices).ok)

    def test_dp_25_10(self):
        """gcd 5: five residue classes."""
        g = make_graph(25, 10)
        cycle = odd_hamilton(g, canonical_a_sequence(g.params))
        self.assertEqual(len(cycle), 100)
        self.assertTrue(verify_hamilton(g, cycle.vertices).ok)

    def test_rim_coverage(self):
        """P_i split the x rim and Q_i split the y rim."""
        g = make_graph(27, 9)
        a = canonical_a_sequence(g.params)
        xs = [v for i in range(a.modulus) for v in layer_filter(path_P(g, a, i), X)]
        ys = [v for i in range(a.modulus) for v in layer_filter(path_Q(g, a, i), Y)]
        self.assertEqual(sorted(xs), layer_vertices(g, X))
        self.assertEqual(sorted(ys), layer_vertices(g, Y))

    def test_inner_coverage(self):
        g = make_graph(27, 9)
        a = canonical_a_sequence(g.params)
        inner = [v for i in range(a.modulus) for name in (path_R, path_S) for v in name(g, a, i)]
        self.assertEqual(len(inner), len(set(inner)))
        self.assertEqual(set(inner), set(layer_vertices(g, U)) | set(layer_vertices(g, V)))

    @PROPERTY_SETTINGS
    @given(odd_graph_with_a_sequence())
    def test_any_valid_a_sequence_gives_a_cycle(self, case):
        g, a = case
        cycle = odd_hamilton(g, a)
        self.assertTrue(verify_hamilton(g, cycle.vertices).ok, f"{g} a={a.as_list()}")


class TestSerialConstruction(unittest.TestCase):
    """The numpy construction must reproduce the path-level cycles exactly."""

    def test_even_matches_ladder_paths(self):
        for n in range(4, 62, 2):
            for t in valid_t_values(n):
                g = make_graph(n, t)
                self.assertEqual(even_cycle_ids(g).tolist(), even_hamilton(g).serial_ids(), f"DP({n},{t})")

    def test_odd_matches_path_system(self):
        for n in range(3, 62, 2):
            for t in valid_t_values(n):
                g = make_graph(n, t)
                a = canonical_a_sequence(g.params)
                self.assertEqual(odd_cycle_ids(g, a).tolist(), odd_hamilton(g, a).serial_ids(), f"DP({n},{t})")

    def test_odd_matches_with_random_sequences(self):
        rng = random.Random(7)
        pairs = [(n, t) for n in range(3, 100, 2) for t in valid_t_values(n)]
        for _ in range(150):
            n, t = rng.choice(pairs)
            g = make_graph(n, t)
            a = random_a_sequence(g.params, rng)
            self.assertEqual(
                odd_cycle_ids(g, a).tolist(), odd_hamilton(g, a).serial_ids(), f"DP({n},{t}) a={a.as_list()}"
            )

    def test_inner_walk_lengths(self):
        """DP(7,3) with a = [0]: R_0 walks 11 inner vertices before its last, S_0 walks 1."""
        g = make_graph(7, 3)
        ids = odd_cycle_ids(g, canonical_a_sequence(g.params)).tolist()
        self.assertEqual(
            ids,
            [0, 1, 2, 9, 19, 8, 18, 7, 17, 13, 16, 12, 15, 11, 14, 21, 22, 23, 24, 25, 26, 27, 20, 10, 3, 4, 5, 6],
        )

    def test_cycle_ids_dispatch(self):
        ids, a = cycle_ids(make_graph(8, 3))
        self.assertIsNone(a)
        self.assertEqual(len(ids), 32)
        ids, a = cycle_ids(make_graph(9, 3), [0, 4, 2])
        self.assertEqual(a.as_list(), [0, 4, 2])
        self.assertEqual(sorted(ids.tolist()), list(range(36)))

    def test_a_sequence_on_even_n_rejected(self):
        with self.assertRaises(ParityError):
            build_cycle(make_graph(8, 3), [0])
        with self.assertRaises(ParityError):
            even_cycle_ids(make_graph(9, 3))
        with self.assertRaises(ParityError):
            odd_cycle_ids(make_graph(8, 3), ASequence(entries=(0,), k=0))

    def test_canonical_ids(self):
        self.assertEqual(canonical_ids([5, 0, 7, 3]).tolist(), [0, 5, 3, 7])
        self.assertEqual(canonical_ids([3, 0, 2]).tolist(), [0, 2, 3])
        with self.assertRaises(ConstructionIntegrityError):
            canonical_ids([1, 2, 3])


class TestHamiltonCycle(unittest.TestCase):
    """Tests for the top-level construction and canonical form."""

    def test_dispatch(self):
        self.assertEqual(len(hamilton_cycle(7, 3)), 28)
        self.assertEqual(len(hamilton_cycle(4, 1)), 16)

    def test_petersen_double_is_hamiltonian(self):
        """DP(5,2) has a Hamilton cycle although GP(5,2) does not."""
        g = make_graph(5, 2)
        cycle = hamilton_cycle(5, 2)
        self.assertEqual(len(cycle), 20)
        self.assertTrue(verify_hamilton(g, cycle.vertices).ok)

    def test_propagates_parameter_errors(self):
        with self.assertRaises(SkipError):
            hamilton_cycle(4, 2)

    def test_canonical_form(self):
        """Starts at X_0; second vertex has the smaller serial id of X_0's two cycle neighbours."""
        for n in range(3, 32):
            for t in valid_t_values(n):
                cycle = hamilton_cycle(n, t)
                ids = cycle.serial_ids()
                self.assertEqual(cycle.vertices[0], Vertex(X, 0))
                self.assertLess(ids[1], ids[-1])

    def test_consecutive_vertices_adjacent(self):
        g = make_graph(11, 5)
        cycle = hamilton_cycle(11, 5)
        seq = list(cycle.vertices)
        for a, b in zip(seq, seq[1:] + seq[:1]):
            self.assertTrue(adjacent(g, a, b))

    def test_cycle_edges(self):
        cycle = hamilton_cycle(7, 3)
        self.assertEqual(len(cycle.edges()), 28)

    def test_deterministic(self):
        self.assertEqual(hamilton_cycle(21, 9), hamilton_cycle(21, 9))


if __name__ == "__main__":
    unittest.main()
