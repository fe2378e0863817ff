#!/usr/bin/env python3
"""Rewrite cli.txt from the current ordwb binary: python3 regen.py <path-to-ordwb>"""
import os
import shlex
import subprocess
import sys

here = os.path.dirname(os.path.abspath(__file__))
path = os.path.join(here, "cli.txt")
tool = sys.argv[1]
commands = [l[2:] for l in open(path).read().splitlines() if l.startswith("$ ")]
out = []
for cmd in commands:
    words = shlex.split(cmd)
    env = dict(os.environ)
    env.pop("ORDWB_BUDGET", None)
    if words[0].startswith("ORDWB_BUDGET="):
        env["ORDWB_BUDGET"] = words[0][len("ORDWB_BUDGET="):]
        words = words[1:]
    r = subprocess.run([tool] + words, capture_output=True, text=True, env=env)
    out.append("$ " + cmd + "\n" + r.stdout + "? %d\n" % r.returncode)
open(path, "w").write("".join(out))
