"""Tour of the zonoid command line interface.

Run with: python3 demos/06_cli_tour.py

Every command reads zonotopes (or measures, face data, matrix models)
from JSON files, writes a single JSON object to stdout, and exits 0 on
success, 2 on input errors, 3 on domain errors.  Outputs are valid
inputs for the next command, so pipelines compose through files.
"""

import json
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ZONOID = [shutil.which("zonoid")] if shutil.which("zonoid") else [sys.executable, "-m", "zonoidal"]

work = Path(tempfile.mkdtemp(prefix="zonoid_demo_"))


def run(*args, expect=0):
    cmd = ZONOID + [str(a) for a in args]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    shown = " ".join(["zonoid"] + [str(a) for a in args])
    print(f"$ {shown}")
    if proc.stdout:
        print(proc.stdout, end="")
    if proc.returncode != expect:
        print(proc.stderr, end="")
        raise SystemExit(f"expected exit {expect}, got {proc.returncode}")
    if expect != 0:
        print(proc.stderr, end="")
        print(f"(exit code {proc.returncode}, as intended)")
    print()
    return json.loads(proc.stdout) if proc.stdout.strip().startswith("{") else None


def save(name, obj):
    p = work / name
    p.write_text(json.dumps(obj))
    return p


# ----------------------------------------------------------------------
print("== Volumes and supports ==\n")

cube = save("cube.json", {
    "ambient_dim": 3,
    "grading": {"base_dim": 3, "degree": 1},
    "generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
})
run("vol", cube)
run("intrinsic", cube, "--degree", 2)
run("support", cube, "--dir", "1,1,1", "--dir", "1,0,0")

# ----------------------------------------------------------------------
print("== Composing commands through files ==\n")

seg = save("seg.json", {"ambient_dim": 3, "grading": {"base_dim": 3, "degree": 1},
                        "generators": [[1, 1, 0]]})
summed = run("sum", cube, seg)
save("summed.json", summed)
run("vol", work / "summed.json")

# Wedge square -> Hodge star -> compare with the projection body.
sq = run("power", cube, "--degree", 2)
save("sq.json", sq)
starred = run("hodge", work / "sq.json")
run("projbody", cube)

# ----------------------------------------------------------------------
print("== J-volume pipeline ==\n")

pz = save("pz.json", {
    "ambient_dim": 4,
    "cgrading": {"complex_dim": 2, "degree": 1},
    "generators": [[1, 0, 0, 0], [0, 0, 1, 0], [0.5, 0.5, 0, 1]],
})
run("jvol", pz)
faces = run("jvol", pz, "--make-faces")
save("faces.json", faces)
run("jvol", "--faces", work / "faces.json", "--samples", 20000)
run("kaza", pz)

# mvj --discs reads complex vectors (as [re, im] pairs) and builds
# discretized disc zonotopes around them before mixing.
vecs = save("vecs.json", {"vectors": [[[1.0, 0.5], [0.0, 0.25]],
                                      [[0.0, 0.2], [1.0, -1.0]]]})
run("mvj", vecs, "--discs", "--q", 64)

# ----------------------------------------------------------------------
print("== Expected determinants ==\n")

dist = {"atoms": [[1, 0], [0, 1]], "probs": [0.5, 0.5]}
model = save("model.json", {
    "size": 2,
    "blocks": [{"width": 1, "dist": dist}, {"width": 1, "dist": dist}],
})
run("edet", model, "--mode", "exact")
run("edet", model, "--mode", "mc", "--samples", 50000, "--seed", 7)
run("edet", save("dist.json", dist), "--vitale")
run("constants", "gaussian-edet", "--m", 3)
run("constants", "tau", "--m", 2)

# ----------------------------------------------------------------------
print("== Measures ==\n")

K = save("k.json", {"ambient_dim": 2, "grading": None, "generators": [[0, 1], [2, 0]]})
mu = run("measure", K, "--to")
save("mu.json", mu)
run("measure", work / "mu.json", "--eval-dir", "1,0")

# ----------------------------------------------------------------------
print("== Error envelopes ==\n")

run("vol", work / "missing.json", expect=2)
run("intrinsic", cube, "--degree", 5, expect=3)

print("workspace:", work)
