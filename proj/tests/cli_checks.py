#!/usr/bin/env python3
"""End-to-end checks for the clm command line tool.

Run as: cli_checks.py /path/to/clm
Exits nonzero on the first failing check.
"""

import json
import subprocess
import sys

CLM = sys.argv[1]


def run(args, stdin=None, expect=0):
    proc = subprocess.run(
        [CLM] + args, input=stdin, capture_output=True, text=True, timeout=60
    )
    assert proc.returncode == expect, (
        f"clm {' '.join(args)}: exit {proc.returncode}, expected {expect}\n"
        f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
    )
    return proc


def matrix(rows):
    return {"rows": len(rows), "cols": len(rows[0]) if rows else 0, "entries": rows}


def subspace(rows, ambient, split=None):
    return {"ambient": ambient, "basis": matrix(rows), "split": split}


GRAPH_2X2 = json.dumps(
    subspace([[1, 0, 1, 0], [0, 1, 0, 1]], 4, {"dim_v": 2, "dim_w": 2})
)
DIAG_FAMILY = json.dumps(
    {
        "family": matrix([[[1], []], [[], [0, 1]]]),
        "ctx": {"dim_v": 2, "dim_w": 2, "u": 2},
    }
)


def check_identity():
    out = run(["identity", "--u", "3", "--k", "1"]).stdout.strip()
    assert out == '{"equal":true,"lhs":6,"rhs":6}', out
    text = run(["identity", "--max-u", "4", "--max-k", "2", "--format", "text"]).stdout
    lines = text.strip().splitlines()
    assert lines[0] == "u,k,lhs,rhs,equal" and len(lines) == 9, text
    assert all(line.endswith("true") for line in lines[1:]), text
    swept = json.loads(run(["identity", "--max-u", "3", "--max-k", "2"]).stdout)
    assert len(swept) == 6 and all(row["equal"] for row in swept), swept


def check_classify():
    report = json.loads(run(["classify", "--sigma", "1"], stdin=GRAPH_2X2).stdout)
    assert report["status"] == "stable", report
    assert [report["interval_lo"], report["interval_hi"]] == [0, 2], report
    text = run(["classify", "--sigma", "1", "--format", "text"], stdin=GRAPH_2X2).stdout
    assert "status: stable" in text, text
    sweep = json.loads(run(["classify", "--sweep", "60", "--seed", "7"]).stdout)
    assert sweep == {"all_agree": True, "samples": 60}, sweep


def check_weights():
    line = json.dumps(subspace([[1, 0, 1, 0]], 4, {"dim_v": 2, "dim_w": 2}))
    support = json.loads(run(["weights"], stdin=line).stdout)
    assert support == {"orbit_degree": 1, "weights": [-1, 1]}, support


def check_dims():
    report = json.loads(
        run(["dims", "--dim-v", "2", "--dim-w", "2", "--u", "2"]).stdout
    )
    assert report["dim_quotient"] == 3, report
    assert report["loci"][0]["dim_secant"] == 2, report
    text = run(
        ["dims", "--dim-v", "4", "--dim-w", "4", "--u", "4", "--flavor", "skew",
         "--format", "text"]
    ).stdout
    assert "walls: 0 2 4" in text, text


def check_limit_pipeline():
    cc_json = run(["collineate"], stdin=DIAG_FAMILY).stdout
    cc = json.loads(cc_json)
    assert [stage["rank"] for stage in cc["stages"]] == [1, 1], cc

    chain_json = run(["chain-from-cc"], stdin=cc_json).stdout
    report = json.loads(run(["chain-validate"], stdin=chain_json).stdout)
    assert report["valid"] and report["total_degree"] == 2, report
    assert report["violated_equations"] == [], report

    # The reverse reading reproduces the collineation byte for byte.
    back = run(["cc-from-chain"], stdin=chain_json).stdout
    assert back == cc_json, (back, cc_json)


def check_halphen():
    hilbert = [[f"1/{r + c + 1}" for c in range(3)] for r in range(3)]
    cc = json.loads(run(["halphen"], stdin=json.dumps(matrix(hilbert))).stdout)
    assert [stage["rank"] for stage in cc["stages"]] == [1, 1, 1], cc


def check_flavors():
    symmetric = json.dumps(
        {
            "family": matrix([[[1], []], [[], [0, 1]]]),
            "ctx": {"dim_v": 2, "dim_w": 2, "u": 2},
        }
    )
    cc = json.loads(run(["quadric"], stdin=symmetric).stdout)
    assert cc["flavor"] == "symmetric", cc

    skew = json.dumps(
        {
            "family": matrix([[[], [1]], [[-1], []]]),
            "ctx": {"dim_v": 2, "dim_w": 2, "u": 2},
        }
    )
    cc = json.loads(run(["skew"], stdin=skew).stdout)
    assert cc["flavor"] == "skew" and cc["stages"][0]["rank"] == 2, cc

    report = json.loads(
        run(["isotropy", "--kind", "symplectic"], stdin=GRAPH_2X2).stdout
    )
    assert report["isotropic"] and report["maximal"], report


def check_snake_oil():
    check = json.loads(run(["snake-oil", "--j", "2", "--order", "6"]).stdout)
    assert check["equal"] and check["lhs"] == [0, 0, 1, 3, 6, 10, 15], check
    consequence = json.loads(run(["snake-oil", "--k", "1", "--order", "8"]).stdout)
    assert consequence["equal"], consequence
    assert consequence["expansion"] == [1, 3, 6, 10, 15, 21, 28, 36, 45], consequence


def check_errors():
    proc = run(["classify", "--sigma", "1"], stdin="{not json", expect=1)
    assert json.loads(proc.stderr)["error"] == "parse", proc.stderr

    # A corrupted stage rank is rejected with the full validation report.
    cc = json.loads(run(["collineate"], stdin=DIAG_FAMILY).stdout)
    cc["stages"][0]["rank"] = 2
    proc = run(["chain-from-cc"], stdin=json.dumps(cc), expect=1)
    error = json.loads(proc.stderr)
    assert error["error"] == "invalid-collineation", error
    assert not error["report"]["valid"] and error["report"]["violations"], error

    # Rank-deficient families have no limit.
    zero_family = json.dumps(
        {"family": matrix([[[], []], [[], []]]), "ctx": {"dim_v": 2, "dim_w": 2, "u": 2}}
    )
    proc = run(["collineate"], stdin=zero_family, expect=1)
    assert json.loads(proc.stderr)["error"] == "domain", proc.stderr

    run(["no-such-command"], expect=2)
    run(["classify", "--no-such-flag"], stdin=GRAPH_2X2, expect=2)
    run(["identity", "--format", "yaml"], expect=2)
    proc = run(["identity"], expect=1)
    assert json.loads(proc.stderr)["error"] == "invalid", proc.stderr
    run(["snake-oil", "--j", "1", "--k", "1"], expect=1)


CHECKS = [
    check_identity,
    check_classify,
    check_weights,
    check_dims,
    check_limit_pipeline,
    check_halphen,
    check_flavors,
    check_snake_oil,
    check_errors,
]

for check in CHECKS:
    check()
    print(f"{check.__name__}: ok")
print(f"all {len(CHECKS)} CLI checks passed")
