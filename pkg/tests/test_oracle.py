import unittest

from core import Layer, ParameterError, SearchBudgetExceeded, Vertex, make_graph, valid_t_values
from construct import hamilton_cycle
from oracle import SearchBudget, agreement_check, brute_force_hamilton, search_hamilton
from verify import verify_hamilton

X, U = Layer.X, Layer.U


class TestBruteForce(unittest.TestCase):
    """Tests for the backtracking oracle."""

    def test_small_graphs_have_cycles(self):
        for n, t in [(3, 1), (5, 2), (7, 3)]:
            g = make_graph(n, t)
            cycle = brute_force_hamilton(g)
            self.assertIsNotNone(cycle, f"DP({n},{t})")
            self.assertEqual(len(cycle), 4 * n)
            self.assertTrue(verify_hamilton(g, cycle.vertices).ok)

    def test_result_is_canonical(self):
        cycle = brute_force_hamilton(make_graph(5, 2))
        self.assertEqual(cycle.vertices[0], Vertex(X, 0))

    def test_deterministic(self):
        g = make_graph(6, 1)
        first = search_hamilton(g)
        second = search_hamilton(g)
        self.assertEqual(first.cycle, second.cycle)
        self.assertEqual(first.steps, second.steps)

    def test_agreement_up_to_48_vertices(self):
        """Construction and oracle agree on every graph with 4n <= 48."""
        for n in range(3, 13):
            for t in valid_t_values(n):
                self.assertTrue(agreement_check(n, t), f"DP({n},{t})")

    def test_seed_path(self):
        g = make_graph(5, 2)
        seed = [Vertex(X, 0), Vertex(U, 0)]
        cycle = brute_force_hamilton(g, seed=seed)
        self.assertIsNotNone(cycle)
        ids = cycle.serial_ids()
        self.assertTrue(ids[1] == 5 or ids[-1] == 5)

    def test_full_cycle_seed_needs_no_search(self):
        """Seeding the constructed cycle closes it without a single step."""
        for n in range(3, 13):
            for t in valid_t_values(n):
                constructed = hamilton_cycle(n, t)
                result = search_hamilton(make_graph(n, t), seed=constructed.vertices)
                self.assertEqual(result.steps, 0, f"DP({n},{t})")
                self.assertEqual(result.cycle, constructed)

    def test_bad_seed(self):
        g = make_graph(5, 2)
        with self.assertRaises(ParameterError):
            brute_force_hamilton(g, seed=[Vertex(U, 0)])
        with self.assertRaises(ParameterError):
            brute_force_hamilton(g, seed=[Vertex(X, 0), Vertex(X, 2)])
        with self.assertRaises(ParameterError):
            brute_force_hamilton(g, seed=[Vertex(X, 0), Vertex(X, 1), Vertex(X, 0)])


class TestBudget(unittest.TestCase):
    """Budget limits are reported, never mistaken for a missing cycle."""

    def test_step_budget_exceeded(self):
        with self.assertRaises(SearchBudgetExceeded) as ctx:
            brute_force_hamilton(make_graph(7, 3), SearchBudget(max_steps=1))
        self.assertEqual(ctx.exception.steps, 2)

    def test_graph_over_vertex_cap(self):
        with self.assertRaises(ParameterError):
            brute_force_hamilton(make_graph(13, 5))
        with self.assertRaises(ParameterError):
            brute_force_hamilton(make_graph(4, 1), SearchBudget(max_vertices=12))
        self.assertIsNotNone(brute_force_hamilton(make_graph(3, 1), SearchBudget(max_vertices=12)))

    def test_budget_must_be_positive(self):
        with self.assertRaises(ParameterError):
            SearchBudget(max_vertices=0)
        with self.assertRaises(ParameterError):
            SearchBudget(max_steps=0)


if __name__ == "__main__":
    unittest.main()
