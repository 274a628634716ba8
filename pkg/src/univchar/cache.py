"""Persistence for the product-coefficient cache.

Line-oriented text format: a JSON header line, one record per coefficient,
and a footer carrying the record count.  Records self-validate (sizes must
add up); version mismatches, truncation, or corrupt records never poison the
in-memory cache - at worst a group or the whole file is discarded with a
warning.
"""

from __future__ import annotations

import json
import os
import sys

from . import schur

FORMAT_VERSION = 1
TOOL = "univchar 0.1.0"


def _fmt_partition(lam):
    return ",".join(str(x) for x in lam) if lam else "-"


def _parse_partition(text):
    if text == "-":
        return ()
    parts = tuple(int(x) for x in text.split(","))
    from .core import as_partition
    return as_partition(parts)


def save_cache(path):
    """Write the current product cache; complete groups only."""
    items = schur.prod_cache_items()
    items.sort(key=lambda rec: (rec[0], rec[1]))
    count = 0
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(json.dumps({"format": FORMAT_VERSION, "tool": TOOL}) + "\n")
        lines = []
        for mu, nu, spec in items:
            for lam in sorted(spec):
                lines.append("%s;%s;%s;%d" % (_fmt_partition(mu),
                                              _fmt_partition(nu),
                                              _fmt_partition(lam),
                                              spec[lam]))
                count += 1
        fh.write("\n".join(lines))
        if lines:
            fh.write("\n")
        fh.write("#end %d\n" % count)
    os.replace(tmp, path)
    return count


def load_cache(path, warn=None):
    """Load a cache file into the product cache.

    Returns the number of coefficient records accepted.  A missing file is
    a cold cache; any structural problem discards the file (or the affected
    group) with a warning.
    """
    if warn is None:
        warn = lambda msg: print("univchar: cache: %s" % msg, file=sys.stderr)
    if not os.path.exists(path):
        return 0
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        warn("unreadable (%s); ignoring" % exc)
        return 0
    if not lines:
        warn("empty file; ignoring")
        return 0
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError:
        warn("bad header; ignoring file")
        return 0
    if header.get("format") != FORMAT_VERSION:
        warn("format version mismatch; ignoring file")
        return 0
    if not lines[-1].startswith("#end "):
        warn("truncated file (no footer); ignoring")
        return 0
    try:
        declared = int(lines[-1].split()[1])
    except (IndexError, ValueError):
        warn("corrupt footer; ignoring file")
        return 0
    body = lines[1:-1]
    if len(body) != declared:
        warn("record count mismatch (%d vs %d); ignoring file"
             % (len(body), declared))
        return 0
    groups = {}
    bad_groups = set()
    for line in body:
        fields = line.split(";")
        key_text = tuple(fields[:2]) if len(fields) >= 2 else None
        try:
            if len(fields) != 4:
                raise ValueError("wrong field count")
            mu = _parse_partition(fields[0])
            nu = _parse_partition(fields[1])
            lam = _parse_partition(fields[2])
            c = int(fields[3])
            if sum(lam) != sum(mu) + sum(nu) or c <= 0:
                raise ValueError("inconsistent record")
        except ValueError:
            warn("rejecting corrupt record %r" % line)
            if key_text is not None:
                bad_groups.add(key_text)
            continue
        groups.setdefault((mu, nu), {})[lam] = c
    # a group with any rejected record is partial and unusable as a memo
    accepted = 0
    for (mu, nu), spec in groups.items():
        if (_fmt_partition(mu), _fmt_partition(nu)) in bad_groups:
            warn("dropping partial group (%r, %r)" % (mu, nu))
            continue
        schur.prod_cache_insert(mu, nu, spec)
        accepted += len(spec)
    return accepted


def default_cache_path(cli_value=None):
    """Cache location: flag > UNIVCHAR_CACHE > none."""
    if cli_value:
        return cli_value
    return os.environ.get("UNIVCHAR_CACHE") or None
