import json
import math

import pytest

from ksgeom.errors import ParseError
from ksgeom.reach import reach, verify_certificate
from ksgeom.serialize import (
    load_certificate,
    report_to_doc,
    save_certificate,
    save_trace,
    trace_to_doc,
)
from ksgeom.sphere import canonicalize
from ksgeom.trace import seed_north_pole

R2 = math.sqrt(0.5)


def sample_certificate():
    return reach(canonicalize((0, R2, R2)), canonicalize((0.5, -0.6, 0.2)))


class TestCertificateDocs:
    def test_round_trip_byte_identical(self):
        cert = sample_certificate()
        report = verify_certificate(cert)
        text1 = save_certificate(cert, report.link_residuals)
        loaded = load_certificate(text1)
        report2 = verify_certificate(loaded)
        text2 = save_certificate(loaded, report2.link_residuals)
        assert text1 == text2

    def test_losslessness(self):
        cert = sample_certificate()
        loaded = load_certificate(save_certificate(cert))
        assert loaded.points == cert.points
        assert loaded.eps == cert.eps
        assert loaded.shell_n == cert.shell_n

    def test_schema_keys(self):
        doc = json.loads(save_certificate(sample_certificate()))
        assert list(doc.keys()) == ["eps", "shell_n", "points", "residuals"]

    def test_rejects_extra_keys(self):
        doc = json.loads(save_certificate(sample_certificate()))
        doc["junk"] = 1
        with pytest.raises(ParseError):
            load_certificate(json.dumps(doc))

    def test_rejects_malformed_json(self):
        with pytest.raises(ParseError) as err:
            load_certificate("{")
        assert err.value.line is not None

    def test_tampered_certificate_rejected_with_link(self):
        cert = sample_certificate()
        doc = json.loads(save_certificate(cert))
        doc["points"][1][2] = -doc["points"][1][2]
        bad = load_certificate(json.dumps(doc))
        report = verify_certificate(bad)
        assert not report.accepted
        assert report.first_bad_link == 1

    def test_report_doc_nan_free(self):
        from ksgeom.reach import ReachCertificate

        report = verify_certificate(ReachCertificate(points=((0.0, 0.0, 1.0), (2.0, 0.0, 0.0))))
        doc = report_to_doc(report)
        json.dumps(doc, allow_nan=False)  # raises if any NaN survived


class TestTraceDocs:
    def test_linear_trace_schema(self):
        t = seed_north_pole()
        t.orthogonal_zero(0, canonicalize((1, 0, 0)), 0)
        doc = trace_to_doc(t)
        assert set(doc) == {"eps", "rays", "facts", "branches", "named_tripods"}
        assert doc["facts"][0]["rule"] == "assume"
        assert doc["facts"][1]["rule"] == "orthogonal_zero"
        assert doc["facts"][1]["premises"] == [0]
        assert doc["branches"][0]["parent"] is None

    def test_demo_trace_serializes(self):
        from ksgeom.demos import demo_second_proof

        t = demo_second_proof()
        text = save_trace(t)
        doc = json.loads(text)
        assert len(doc["facts"]) == len(t.facts)
        assert len(doc["rays"]) == len(t.rays)
        cert_facts = [f for f in doc["facts"] if f["witness"] and "certificate" in f["witness"]]
        assert cert_facts
        for f in cert_facts:
            w = f["witness"]
            assert set(w["certificate"]) == {"eps", "shell_n", "points", "residuals"}
            if w["frame"] is not None:
                assert len(w["frame"]) == 3
        closed = [b for b in doc["branches"] if b["contradiction"]]
        assert closed
