import json

import pytest

from homtwist.errors import (
    DuplicateName,
    ManifestSyntaxError,
    UnknownName,
    WrongKind,
)
from homtwist.manifest import (
    EXIT_EXPECTATION,
    EXIT_OK,
    parse_manifest,
    run,
    serialize_manifest,
    table,
)
from homtwist.suite import GOLDEN_MANIFEST


def golden_text():
    return json.dumps(GOLDEN_MANIFEST)


def small_manifest(tasks=()):
    return json.dumps(
        {
            "objects": {
                "K2": {
                    "kind": "hom_algebra",
                    "dim": 2,
                    "mul": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
                    "alpha": [[1, 0], [0, 1]],
                }
            },
            "tasks": list(tasks),
        }
    )


class TestParse:
    def test_empty_manifest(self):
        m = parse_manifest('{"objects": {}, "tasks": []}')
        assert m.tasks == ()
        assert m.objects == {}

    def test_golden_parses_and_runs(self):
        code, report = run(parse_manifest(golden_text()))
        assert code == EXIT_OK
        assert "all expectations met" in report

    def test_undefined_name(self):
        text = small_manifest([{"op": "check_hom_algebra", "args": ["Q"]}])
        with pytest.raises(UnknownName):
            parse_manifest(text)

    def test_unknown_op(self):
        text = small_manifest([{"op": "frobnicate", "args": ["K2"]}])
        with pytest.raises(UnknownName):
            parse_manifest(text)

    def test_duplicate_object_name(self):
        text = (
            '{"objects": {"A": {"kind": "hom_algebra", "dim": 1, "mul": [[[1]]],'
            ' "alpha": [[1]]}, "A": {"kind": "hom_algebra", "dim": 1, "mul": [[[1]]],'
            ' "alpha": [[1]]}}, "tasks": []}'
        )
        with pytest.raises(DuplicateName):
            parse_manifest(text)

    def test_syntax_error_carries_position(self):
        with pytest.raises(ManifestSyntaxError) as err:
            parse_manifest('{"objects": {,}}')
        assert err.value.line >= 1 and err.value.col >= 1

    def test_scalar_validation(self):
        from homtwist.errors import MalformedRational

        bad = small_manifest().replace("[1, 0]", '["1.5", 0]', 1)
        with pytest.raises(MalformedRational):
            parse_manifest(bad)

    @pytest.mark.parametrize(
        "mangle",
        [
            ('"dim": 2', '"dim": "two"'),
            ('"side": "left"', '"side": "sideways"'),
        ],
    )
    def test_malformed_fields_are_semantic_errors(self, mangle):
        doc = {
            "objects": {
                "act": {
                    "kind": "action",
                    "side": "left",
                    "acting_dim": 2,
                    "module_dim": 2,
                    "table": [[[1, 0], [0, 1]], [[1, 0], [0, 1]]],
                    "alpha_m": [[1, 0], [0, 1]],
                },
                "K2": json.loads(small_manifest())["objects"]["K2"],
            },
            "tasks": [],
        }
        text = json.dumps(doc).replace(*mangle)
        with pytest.raises(WrongKind):
            parse_manifest(text)

    def test_gallery_binds_members(self):
        text = json.dumps(
            {
                "objects": {
                    "g": {
                        "kind": "gallery",
                        "name": "homalg_2dim",
                        "params": {"a": "1", "l1": "1", "l2": "2"},
                    }
                },
                "tasks": [{"op": "check_hom_algebra", "args": ["g.D"]}],
            }
        )
        code, _ = run(parse_manifest(text))
        assert code == EXIT_OK


class TestRoundTrip:
    def test_parse_serialize_parse(self):
        m = parse_manifest(golden_text())
        again = parse_manifest(serialize_manifest(m))
        assert again == m

    def test_small_round_trip(self):
        m = parse_manifest(small_manifest([{"op": "check_associative", "args": ["K2"]}]))
        assert parse_manifest(serialize_manifest(m)) == m


class TestRun:
    def test_expected_fail_that_fails_is_ok(self):
        text = small_manifest(
            [{"op": "check_hom_algebra", "args": ["K2"], "expect": "pass"}]
        )
        code, _ = run(parse_manifest(text))
        assert code == EXIT_OK

    def test_expectation_failure(self):
        # K2 is associative, so expecting the check to fail must exit 1
        text = small_manifest(
            [{"op": "check_associative", "args": ["K2"], "expect": "fail"}]
        )
        code, report = run(parse_manifest(text))
        assert code == EXIT_EXPECTATION
        assert "EXPECTATION FAILED" in report

    def test_any_expectation(self):
        text = small_manifest(
            [{"op": "check_associative", "args": ["K2"], "expect": "any"}]
        )
        code, _ = run(parse_manifest(text))
        assert code == EXIT_OK

    def test_construct_binds_and_failures_report_witness(self):
        text = json.dumps(
            {
                "objects": {
                    "g": {
                        "kind": "gallery",
                        "name": "ttp_k2_lambda",
                        "params": {"lam": "2"},
                    }
                },
                "tasks": [
                    {"op": "ttp", "args": ["g.A", "g.B", "g.R"], "as": "P"},
                    {"op": "check_associative", "args": ["P"], "expect": "pass"},
                ],
            }
        )
        code, report = run(parse_manifest(text))
        assert code == EXIT_OK
        assert "task 2" in report

    def test_failed_construct_counts_as_fail(self):
        # the identity map is not a twisting map matrix here: use a broken one
        text = json.dumps(
            {
                "objects": {
                    "K2": {
                        "kind": "hom_algebra",
                        "dim": 2,
                        "mul": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
                        "alpha": [[1, 0], [0, 1]],
                    },
                    "bad": {
                        "kind": "twisting_map",
                        "dim_a": 2,
                        "dim_b": 2,
                        "matrix": [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
                    },
                },
                "tasks": [{"op": "ttp", "args": ["K2", "K2", "bad"], "expect": "fail"}],
            }
        )
        code, _ = run(parse_manifest(text))
        assert code == EXIT_OK


class TestTable:
    def test_k2_table(self):
        m = parse_manifest(small_manifest())
        text = table(m, "K2")
        lines = text.splitlines()
        assert len(lines) == 4  # header, rule, two rows
        assert "e0" in lines[0] and "e1" in lines[0]
        assert lines[2].startswith("e0")

    def test_ttp_table_matches_paper_layout(self):
        # the lambda = 2 table, first row: 2 e00, 2 e01, -1 e00, -2 e01
        text = json.dumps(
            {
                "objects": {
                    "g": {"kind": "gallery", "name": "ttp_k2_lambda", "params": {"lam": "2"}}
                },
                "tasks": [{"op": "ttp", "args": ["g.A", "g.B", "g.R"], "as": "P"}],
            }
        )
        rows = table(parse_manifest(text), "P").splitlines()
        first = [c.strip() for c in rows[2].split("|")]
        assert first[1:] == ["2*e0", "2*e1", "-1*e0", "-2*e1"]
        third = [c.strip() for c in rows[4].split("|")]
        assert third[1:] == ["2*e2", "e3", "-1*e2", "-1*e3"]

    def test_unknown_name(self):
        m = parse_manifest(small_manifest())
        with pytest.raises(UnknownName):
            table(m, "missing")

    def test_wrong_kind(self):
        text = json.dumps(
            {
                "objects": {
                    "C": {
                        "kind": "hom_coalgebra",
                        "dim": 1,
                        "comul": [[[1]]],
                        "alpha": [[1]],
                    }
                },
                "tasks": [],
            }
        )
        m = parse_manifest(text)
        with pytest.raises(WrongKind):
            table(m, "C")
