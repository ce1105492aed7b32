#!/usr/bin/env python3
"""End-to-end checks of the walker binary: outputs and exit codes."""
import json
import os
import subprocess
import sys
import tempfile

WALKER = sys.argv[1]
failures = []


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("WALKER_MAX_ORDER", None)
    if env:
        e.update(env)
    p = subprocess.run([WALKER, *args], capture_output=True, text=True, env=e)
    return p.returncode, p.stdout, p.stderr


def check(name, cond, info=""):
    if not cond:
        failures.append(f"{name}: {info}")


def write(tmp, name, obj):
    path = os.path.join(tmp, name)
    with open(path, "w") as f:
        f.write(obj if isinstance(obj, str) else json.dumps(obj))
    return path


with tempfile.TemporaryDirectory() as tmp:
    ike = os.path.join(tmp, "ike96.json")
    rc, _, err = run("construct", "example", "ike96", "-o", ike)
    check("construct ike96", rc == 0, err)
    spec = json.load(open(ike))
    check("ike96 u1", spec["u"][0] == "-y3^2 - 4*y4^2 - y5^2", spec["u"][0])

    rc, out, err = run("classify", ike)
    rep = json.loads(out)
    check("classify ike96", rc == 0 and rep["classification"]["llhc"] and not rep["classification"]["pr_wave"], out)
    check("ike96 checks", all(rep["checks"].values()), out)
    for name in ["thesis", "galaev05", "pp_quadratic", "pr_basic"]:
        path = os.path.join(tmp, name + ".json")
        run("construct", "example", name, "-o", path)
        rc, o, _ = run("classify", path)
        check(name + " checks", rc == 0 and all(json.loads(o)["checks"].values()), o)
    rc2, out2, _ = run("classify", ike)
    check("deterministic report", out == out2)

    rc, out, err = run("holonomy", ike)
    rep = json.loads(out)
    check("holonomy ike96", rc == 0 and rep["screen_algebra"]["dim"] == 3, out)
    check("ike96 irreducible", rep["screen_algebra"].get("irreducible") is True, out)

    rc, out, err = run("holonomy", ike, "--numeric-check")
    rep = json.loads(out)
    check("numeric check", rc == 0 and rep["numeric"]["max_screen_residual"] < 1e-4, out)

    rc, out, err = run("holonomy", ike, "--numeric-check", "--loop-steps", "16", "--loop-radius", "3",
                       "--loop-tolerance", "1e-12")
    check("non-convergence exit 4", rc == 4, f"{rc} {err}")

    pp = os.path.join(tmp, "pp.json")
    run("construct", "example", "pp_quadratic", "-o", pp)
    rc, out, _ = run("classify", pp)
    check("pp cahen_wallach", json.loads(out)["classification"]["cahen_wallach"], out)
    rc, out, _ = run("holonomy", pp)
    check("pp screen 0", json.loads(out)["screen_algebra"]["dim"] == 0, out)

    flat = write(tmp, "flat.json", {"n": 2, "f": "0", "u": ["0", "0"], "convention": "component"})
    rc, out, _ = run("holonomy", flat)
    rep = json.loads(out)
    check("flat empty", rep["full_holonomy"]["dim"] == 0 and rep["screen_algebra"]["dim"] == 0, out)

    bad = write(tmp, "bad.json", {"n": 2, "f": "y1^2 +", "u": ["0", "0"]})
    rc, _, err = run("classify", bad)
    check("malformed polynomial exit 2", rc == 2 and "f:" in err, f"{rc} {err}")

    broken = write(tmp, "broken.json", '{\n  "n": 2,\n  "f": "0"\n  "u": []\n}')
    rc, _, err = run("classify", broken)
    check("JSON syntax exit 2 with line", rc == 2 and "broken.json:4:" in err, f"{rc} {err}")

    rc, _, err = run("classify", os.path.join(tmp, "missing.json"))
    check("missing file exit 2", rc == 2, err)

    half = write(tmp, "half.json", {"n": 1, "f": "0", "u": ["2*y1*z"], "convention": "walker-half"})
    nog = write(tmp, "nog.json", {"n": 1, "f": "0", "u": ["y1*z"]})
    rc, out, err = run("classify", nog)
    check("missing convention warns", rc == 0 and "convention" in err, err)
    rc_h, out_h, _ = run("classify", half)
    rc_n, out_n, _ = run("classify", nog)
    check("walker-half halves u", json.loads(out_h)["classification"] == json.loads(out_n)["classification"])

    fiber = write(tmp, "fiber.json", {"n": 2, "f": "0", "u": ["0", "0"], "convention": "component",
                                      "g": [["1", "y1"], ["y1", "1 + y1^2"]]})
    rc, _, err = run("holonomy", fiber)
    check("g != identity exit 3", rc == 3, f"{rc} {err}")

    rc, _, err = run("holonomy", pp, "--max-order", "0")
    check("max order flag", rc == 0, err)
    cubic = write(tmp, "cubic.json", {"n": 2, "f": "y1^3 + y2^4", "u": ["0", "0"], "convention": "component"})
    rc, out, err = run("holonomy", cubic, env={"WALKER_MAX_ORDER": "0"})
    check("WALKER_MAX_ORDER honored", rc == 0 and json.loads(out)["full_holonomy"]["max_order"] == 0, out)
    check("non-stabilization warning", "max order 0" in err, err)
    rc, _, err = run("holonomy", cubic, env={"WALKER_MAX_ORDER": "lots"})
    check("bad WALKER_MAX_ORDER exit 2", rc == 2, err)
    rc, _, err = run("holonomy", cubic, "--point", "0,1,2")
    check("bad point exit 2", rc == 2, err)
    rc, out, err = run("holonomy", cubic, "--point", "0,1/2,-1,3")
    check("point accepted", rc == 0, err)

    sym = os.path.join(tmp, "sym.json")
    rc, _, err = run("construct", "symmetric", "sl3-so3", "--verify", "-o", sym)
    check("symmetric sl3-so3", rc == 0 and json.load(open(sym))["n"] == 5 and "screen holonomy dim 3" in err, err)

    gal = os.path.join(tmp, "gal.json")
    rc, _, err = run("construct", "galaev", "--n", "3", "--f", "y1^2", "-o", gal)
    spec = json.load(open(gal))
    check("galaev N = 0", rc == 0 and spec["u"] == ["0", "0", "0"], str(spec))
    qspec = write(tmp, "q.json", {"algebra": "so3-5dim", "count": 2})
    rc, _, err = run("construct", "galaev", qspec, "--verify", "-o", gal)
    check("galaev from rspace", rc == 0 and "screen holonomy dim 3" in err, err)
    badq = write(tmp, "badq.json", {"n": 3, "Q": [[[[0, 0, 0], [0, 0, 1], [0, -1, 0]],
                                                    [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
                                                    [[0, 0, 0], [0, 0, 0], [0, 0, 0]]]]})
    rc, _, err = run("construct", "galaev", badq)
    check("Bianchi violation exit 3", rc == 3 and "Bianchi" in err, f"{rc} {err}")
    rc, _, err = run("construct", "example", "nope")
    check("unknown example exit 2", rc == 2, err)

    rc, out, _ = run("liealg", "bspace", "g2")
    check("bspace g2", rc == 0 and json.loads(out)["space_dim"] == 64, out[:200])
    rc, out, _ = run("liealg", "kspace", "so3-5dim")
    check("kspace so3-5dim", rc == 0 and json.loads(out)["space_dim"] == 1, out[:200])
    rc, out, _ = run("liealg", "bspace", "so2")
    check("bspace so2", rc == 0 and json.loads(out)["space_dim"] == 2, out[:200])
    rc, out, _ = run("liealg", "rspace", "so3-5dim")
    rep = json.loads(out)
    check("rspace so3-5dim", rep["space_dim"] == 5 and rep["contained_in_bspace"], out[:200])
    rc, out, _ = run("liealg", "weakberger", "e12+e34")
    rep = json.loads(out)
    check("weakberger e12+e34", not rep["weak_berger"] and not rep["berger"], out)
    rc, out, _ = run("liealg", "killing", "so3")
    check("killing so3", json.loads(out)["killing_inertia"]["negative"] == 3, out)
    openalg = write(tmp, "open.json", {"n": 3, "basis": [[[0, 1, 0], [-1, 0, 0], [0, 0, 0]],
                                                         [[0, 0, 0], [0, 0, 1], [0, -1, 0]]]})
    rc, _, err = run("liealg", "bspace", openalg)
    check("non-closed algebra exit 3", rc == 3 and "bracket-closed" in err, f"{rc} {err}")
    rc, _, _ = run("liealg", "nonsense", "so3")
    check("bad kind exit 2", rc == 2)

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("cli: all checks passed")
