import json

import pytest

from sylowlens.groupfile import (GroupFileError, Report, emit_group_file,
                                 group_to_spec, load_group, parse_group_file)
from sylowlens.corpus import symmetric_group
from sylowlens.theorems import scan_corpus
from sylowlens.verdicts import BoundVerdict


class TestGroupFile:
    def test_parse_image_arrays(self):
        spec = parse_group_file(
            b'{"name":"S3","degree":3,"generators":[[1,0,2],[1,2,0]]}'
        )
        assert spec.name == "S3"
        assert spec.to_group().order() == 6

    def test_parse_cycle_strings(self):
        spec = parse_group_file(
            '{"degree":3,"generators":["(0 1 2)"]}'
        )
        assert spec.generators[0].images == (1, 2, 0)

    def test_trivial_group_file(self):
        spec = parse_group_file('{"degree":1,"generators":[]}')
        assert spec.to_group().order() == 1

    def test_round_trip_is_byte_identical(self):
        original = parse_group_file(
            '{"name":"S3","degree":3,"generators":["(0 1)","(0 1 2)"],'
            '"metadata":{"tag":"fixture"}}'
        )
        emitted = emit_group_file(original)
        assert emit_group_file(parse_group_file(emitted)) == emitted
        doc = json.loads(emitted)
        assert doc["generators"] == [[1, 0, 2], [1, 2, 0]]

    @pytest.mark.parametrize("text,fragment", [
        ('{"generators":[[0,1]]}', "degree"),
        ('{"degree":0,"generators":[]}', "degree"),
        ('{"degree":3}', "generators"),
        ('{"degree":3,"generators":[[0,0,1]]}', "generators[0]"),
        ('{"degree":3,"generators":[[0,1]]}', "length"),
        ('{"degree":3,"generators":[42]}', "generators[0]"),
        ('{"degree":3,"generators":["(0 9)"]}', "generators[0]"),
        ('not json', "JSON"),
        ('[1,2]', "object"),
    ])
    def test_diagnostics(self, text, fragment):
        with pytest.raises(GroupFileError) as err:
            parse_group_file(text)
        assert fragment in str(err.value)

    def test_load_group_missing_file(self, tmp_path):
        with pytest.raises(GroupFileError):
            load_group(str(tmp_path / "nope.json"))

    def test_group_to_spec_round_trip(self, tmp_path):
        G = symmetric_group(4)
        data = emit_group_file(group_to_spec(G))
        path = tmp_path / "s4.json"
        path.write_bytes(data)
        G2 = load_group(str(path))
        assert G2.order() == 24


class TestReport:
    def test_from_scan_round_trip(self):
        result = scan_corpus([symmetric_group(3)], description="one group")
        report = Report.from_scan(result)
        data = report.to_bytes()
        again = Report.from_bytes(data)
        assert again.summary == report.summary
        assert again.corpus_description == "one group"
        assert len(again.verdicts) == len(report.verdicts)

    def test_summary_matches_recount_when_complete(self):
        result = scan_corpus([symmetric_group(4), symmetric_group(3)])
        report = Report.from_scan(result)
        assert report.verdicts_complete
        recount = report.recount()
        for field in ("checked", "held", "failed", "precondition_failed",
                      "errors"):
            assert report.summary[field] == recount[field], field

    def test_version_checked(self):
        with pytest.raises(GroupFileError):
            Report.from_json({"report_version": 99})

    def test_from_verdicts_counts(self):
        verdicts = [
            BoundVerdict(claim_id="hall", holds=True),
            BoundVerdict(claim_id="hall", holds=False),
            BoundVerdict(claim_id="hall", preconditions_met=False),
            BoundVerdict(claim_id="hall", error="cap"),
        ]
        report = Report.from_verdicts(verdicts)
        assert report.summary == {
            "checked": 2, "held": 1, "failed": 1,
            "precondition_failed": 1, "errors": 1,
        }
