#!/usr/bin/env python3
"""Regenerates the deterministic synthetic fixtures under tests/fixtures/.

The fixtures emulate the IBRL log format:
    date time epoch moteid temperature humidity light voltage

synthetic_ibrl.txt
    A four-hour slice with ten clean nodes, node 37 violating both normal
    ranges in every reading, node 14 violating only in windows 6..11,
    clean-looking data for the excluded nodes 5 and 15, two out-of-period
    records and one malformed line.

clean_ring.txt
    Three nodes whose readings stay inside both normal ranges and whose
    (temperature, humidity) pairs trace tight rings, so neither detection
    method flags anything.

Everything is a pure function of (node, sample index); rerunning the script
reproduces the files byte for byte.
"""

import math
import os

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")

CLEAN_NODES = [1, 2, 3, 4, 6, 7, 8, 9, 10, 50]
EXCLUDED_NODES = [5, 15]
PARTIAL_NODE = 14
FULL_NODE = 37
SAMPLES = 120  # every 120 s across 00:00 .. 04:00
PARTIAL_RANGE = range(30, 60)  # sample indices inside windows 6..11


def timestamp(i, date="2004-03-01"):
    seconds = 10 + 120 * i
    frac = (i * 37 + 101) % 1000
    return "%s %02d:%02d:%02d.%03d" % (
        date, seconds // 3600, seconds // 60 % 60, seconds % 60, frac)


def clean_values(node, i):
    temp = 16.7 + 0.55 * math.sin(2 * math.pi * ((i + node * 3) % 40) / 40.0) \
        + 0.05 * ((node * 7 + i) % 5)
    hum = 43.9 + 0.7 * math.sin(2 * math.pi * ((i + node * 5) % 30) / 30.0) \
        + 0.04 * ((node + i) % 7)
    return temp, hum


def values(node, i):
    if node == FULL_NODE:
        temp = 32.0 + 0.4 * math.sin(2 * math.pi * (i % 20) / 20.0)
        hum = 22.0 + 0.4 * math.cos(2 * math.pi * (i % 25) / 25.0)
    elif node == PARTIAL_NODE and i in PARTIAL_RANGE:
        temp = 20.5 + 0.25 * math.sin(2 * math.pi * (i % 10) / 10.0)
        hum = 47.4 + 0.25 * math.cos(2 * math.pi * (i % 12) / 12.0)
    else:
        temp, hum = clean_values(node, i)
    return temp, hum


def record(node, i, date="2004-03-01"):
    temp, hum = values(node, i)
    light = 90.0 + (i % 11) * 2.5
    voltage = 2.60 + 0.01 * (i % 8)
    return "%s %d %d %.4f %.4f %.2f %.5f" % (
        timestamp(i, date), i + 1, node, temp, hum, light, voltage)


def write(name, lines):
    path = os.path.join(OUT_DIR, name)
    with open(path, "w", newline="\n") as out:
        out.write("\n".join(lines) + "\n")
    print("wrote %s (%d lines)" % (path, len(lines)))


def synthetic_ibrl():
    lines = []
    for node in sorted(CLEAN_NODES + EXCLUDED_NODES + [PARTIAL_NODE, FULL_NODE]):
        for i in range(SAMPLES):
            lines.append(record(node, i))
    # out-of-period records for node 1
    lines.append(record(1, 0, date="2004-03-02"))
    lines.append(record(1, 1, date="2004-03-02"))
    lines.append("corrupted record xx")
    write("synthetic_ibrl.txt", lines)


def clean_ring():
    lines = []
    for node in (1, 2, 3):
        for i in range(SAMPLES):
            angle = 2 * math.pi * i / SAMPLES + node
            temp = 16.8 + 0.5 * math.cos(angle)
            hum = 44.0 + 0.5 * math.sin(angle)
            lines.append("%s %d %d %.4f %.4f %.2f %.5f" % (
                timestamp(i), i + 1, node, temp, hum,
                90.0 + (i % 11) * 2.5, 2.60 + 0.01 * (i % 8)))
    write("clean_ring.txt", lines)


if __name__ == "__main__":
    synthetic_ibrl()
    clean_ring()
