import json
import random
import unittest

from core import CertificateSyntaxError, CertificateVerificationError, InvalidCycleError, make_graph, valid_pairs
from construct import build_cycle, construction_name, hamilton_cycle, make_cycle, random_a_sequence
from formats import (
    Construction,
    certificate_for,
    decode_certificate,
    encode_certificate,
    encode_dot,
    encode_edge_list,
)


class TestEdgeList(unittest.TestCase):
    """Tests for the edge-list export."""

    def test_dp_3_1(self):
        lines = encode_edge_list(make_graph(3, 1)).splitlines()

        self.assertEqual(lines[0], "3 1")
        self.assertEqual(lines[1], "0 1")
        self.assertIn("3 7", lines)
        self.assertEqual(len(lines), 6 * 3 + 1)

    def test_sorted_and_deterministic(self):
        g = make_graph(10, 3)
        text = encode_edge_list(g)
        pairs = [tuple(map(int, line.split())) for line in text.splitlines()[1:]]

        self.assertEqual(pairs, sorted(pairs))
        self.assertTrue(all(a < b for a, b in pairs))
        self.assertEqual(text, encode_edge_list(make_graph(10, 3)))
        self.assertTrue(text.endswith("\n"))


class TestDot(unittest.TestCase):
    """Tests for the DOT export."""

    def test_highlighted_cycle(self):
        g = make_graph(7, 3)
        text = encode_dot(g, hamilton_cycle(7, 3))
        lines = text.splitlines()

        self.assertEqual(lines[0], 'graph "DP(7,3)" {')
        self.assertEqual(lines[-1], "}")
        self.assertEqual(sum(1 for line in lines if "[layer=" in line), 28)
        self.assertEqual(sum(1 for line in lines if " -- " in line), 42)
        self.assertEqual(sum(1 for line in lines if "color=" in line), 28)
        self.assertIn('  x0 [layer="x"];', lines)

    def test_plain_graph(self):
        text = encode_dot(make_graph(5, 2))
        self.assertNotIn("color=", text)
        self.assertIn("  x0 -- x1;", text)

    def test_rejects_broken_cycle(self):
        g = make_graph(7, 3)
        cycle = hamilton_cycle(7, 3)
        broken = make_cycle(g, cycle.vertices[:1] + cycle.vertices[2:3] + cycle.vertices[1:2] + cycle.vertices[3:])
        with self.assertRaises(InvalidCycleError):
            encode_dot(g, broken)


class TestCertificate(unittest.TestCase):
    """Tests for JSON cycle certificates."""

    def _cert_text(self, n, t):
        g = make_graph(n, t)
        cycle, a = build_cycle(g)
        return encode_certificate(cycle, construction_name(g), a)

    def test_odd_round_trip(self):
        text = self._cert_text(9, 3)
        cert = decode_certificate(text)

        self.assertEqual((cert.n, cert.t), (9, 3))
        self.assertEqual(cert.construction, Construction.ODD_PQRS)
        self.assertEqual(len(cert.a_sequence), 3)
        self.assertEqual(len(cert.cycle), 36)
        self.assertEqual(cert.cycle[0], 0)

    def test_even_round_trip(self):
        cert = decode_certificate(self._cert_text(8, 3))
        self.assertEqual(cert.construction, Construction.EVEN_LADDER)
        self.assertIsNone(cert.a_sequence)

    def test_byte_stable(self):
        text = self._cert_text(7, 3)
        self.assertEqual(text, self._cert_text(7, 3))
        cert = certificate_for(hamilton_cycle(7, 3), "odd_pqrs", [0])
        self.assertEqual(json.loads(text)["cycle"], cert.cycle)

    def test_tampered_id_fails_verification(self):
        payload = json.loads(self._cert_text(7, 3))
        payload["cycle"][5] = payload["cycle"][0]
        with self.assertRaises(CertificateVerificationError) as ctx:
            decode_certificate(json.dumps(payload))
        self.assertIn("duplicate", ctx.exception.report.checks_failed())

    def test_truncated_json(self):
        text = self._cert_text(7, 3)
        with self.assertRaises(CertificateSyntaxError):
            decode_certificate(text[: len(text) // 2])

    def test_shape_errors(self):
        payload = json.loads(self._cert_text(7, 3))
        cases = [
            dict(payload, cycle=payload["cycle"][:-1]),
            dict(payload, cycle=payload["cycle"][:-1] + [99]),
            dict(payload, t=4),
            dict(payload, construction="even_ladder"),
            dict(payload, construction="mystery"),
            dict(payload, a_sequence=None),
            dict(payload, a_sequence=[0, 1]),
            dict(payload, extra_field=1),
        ]
        for case in cases:
            with self.assertRaises(CertificateSyntaxError, msg=str(case)[:60]):
                decode_certificate(json.dumps(case))
        with self.assertRaises(CertificateSyntaxError):
            decode_certificate("[1, 2, 3]")

    def test_decode_matches_certificate_for(self):
        """Decoding an encoded certificate gives back the same model."""
        rng = random.Random(50)
        for n, t in rng.sample(valid_pairs(3, 120), 50):
            g = make_graph(n, t)
            a = random_a_sequence(g.params, rng) if g.params.is_odd else None
            cycle, a = build_cycle(g, a)
            name = construction_name(g)
            self.assertEqual(
                decode_certificate(encode_certificate(cycle, name, a)),
                certificate_for(cycle, name, a),
                f"DP({n},{t})",
            )

    def test_string_and_float_fields_rejected(self):
        payload = json.loads(self._cert_text(7, 3))
        cases = [
            dict(payload, n="7"),
            dict(payload, t=3.0),
            dict(payload, cycle=[float(sid) for sid in payload["cycle"]]),
            dict(payload, cycle=[str(sid) for sid in payload["cycle"]]),
            dict(payload, a_sequence=["0"]),
            dict(payload, n=True),
        ]
        for case in cases:
            with self.assertRaises(CertificateSyntaxError, msg=str(case)[:60]):
                decode_certificate(json.dumps(case))

    def test_brute_force_certificate(self):
        """Brute-force cycles certify without an a-sequence."""
        cycle = hamilton_cycle(5, 2)
        cert = decode_certificate(encode_certificate(cycle, Construction.BRUTE_FORCE))
        self.assertEqual(cert.construction, Construction.BRUTE_FORCE)


if __name__ == "__main__":
    unittest.main()
