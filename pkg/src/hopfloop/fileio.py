"""Line-oriented text formats for structures, Cayley tables, actions,
coactions, and the dimodule / smash bundles.

Formats are sparse (nonzero entries only) and hand-editable: `#` starts a
comment line and blank lines are skipped everywhere.  Serialization is
deterministic — section order is fixed and entries are emitted in sorted
index order — so serialize(parse(serialize(X))) is byte-identical.
"""

import os

from .actions import ActionData, CoactionData
from .dimodules import OVER_COQUASIGROUP, OVER_QUASIGROUP, LongDimodule
from .errors import ParseError
from .fields import GF, QQ
from .loops import LoopTable
from .smash import CosmashInput, SmashInput
from .structures import (AlgebraData, CoalgebraData, HopfCoquasigroup,
                         HopfQuasigroup)
from .tensors import Mat, Ten3, Vec

_STRUCT_HEADERS = {"hopfqg": HopfQuasigroup, "hopfcoqg": HopfCoquasigroup}
_SECTIONS = ("mu", "delta", "unit", "counit", "antipode")


class _Lines:
    """Comment/blank-stripping line reader that remembers line numbers."""

    def __init__(self, text):
        self.items = [(no, line.strip())
                      for no, line in enumerate(text.splitlines(), start=1)
                      if line.strip() and not line.strip().startswith("#")]
        self.pos = 0

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else None

    def next(self, what):
        item = self.peek()
        if item is None:
            last = self.items[-1][0] if self.items else 0
            raise ParseError(f"unexpected end of file, expected {what}", last)
        self.pos += 1
        return item


def _parse_scalar(field, token, line):
    try:
        return field.parse(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad scalar {token!r}: {exc}", line) from exc


def _index(token, bound, line):
    try:
        v = int(token)
    except ValueError as exc:
        raise ParseError(f"bad index {token!r}", line) from exc
    if not 0 <= v < bound:
        raise ParseError(f"index {v} out of range [0, {bound})", line)
    return v


def _parse_indices(tokens, count, bound, line):
    if len(tokens) != count + 1:
        raise ParseError(
            f"expected {count} indices and a scalar, got {len(tokens)} "
            "fields", line)
    return [_index(t, bound, line) for t in tokens[:count]]


def _parse_field_line(lines):
    no, line = lines.next("field declaration")
    parts = line.split()
    if parts[:2] == ["field", "Q"] and len(parts) == 2:
        return QQ
    if len(parts) == 3 and parts[:2] == ["field", "F"]:
        try:
            return GF(int(parts[2]))
        except ValueError as exc:
            raise ParseError(f"bad prime {parts[2]!r}: {exc}", no) from exc
    raise ParseError(f"expected 'field Q' or 'field F <p>', got {line!r}", no)


def parse_structure(text):
    lines = _Lines(text)
    no, header = lines.next("structure header")
    cls = _STRUCT_HEADERS.get(header)
    if cls is None:
        raise ParseError(
            f"expected 'hopfqg' or 'hopfcoqg', got {header!r}", no)
    field = _parse_field_line(lines)
    no, dim_line = lines.next("dim line")
    parts = dim_line.split()
    if len(parts) != 2 or parts[0] != "dim":
        raise ParseError(f"expected 'dim <n>', got {dim_line!r}", no)
    try:
        n = int(parts[1])
    except ValueError as exc:
        raise ParseError(f"bad dimension {parts[1]!r}", no) from exc
    if n <= 0:
        raise ParseError(f"dimension must be positive, got {n}", no)

    sections = {}
    current = None
    while lines.peek() is not None:
        no, line = lines.next("section or entry")
        if line.endswith(":"):
            name = line[:-1]
            if name not in _SECTIONS:
                raise ParseError(f"unknown section {name!r}", no)
            if name in sections:
                raise ParseError(f"duplicate section {name!r}", no)
            current = sections[name] = []
            continue
        if current is None:
            raise ParseError(f"entry before any section: {line!r}", no)
        current.append((no, line.split()))
    missing = [s for s in _SECTIONS if s not in sections]
    if missing:
        raise ParseError(
            "missing sections: " + ", ".join(missing),
            lines.items[-1][0] if lines.items else 0)

    def tensor(name):
        entries = []
        for no, toks in sections[name]:
            i, j, k = _parse_indices(toks, 3, n, no)
            entries.append((i, j, k, _parse_scalar(field, toks[3], no)))
        return Ten3.from_entries(field, n, entries)

    def vector(name):
        data = [field.zero] * n
        for no, toks in sections[name]:
            (i,) = _parse_indices(toks, 1, n, no)
            data[i] = _parse_scalar(field, toks[1], no)
        return Vec(field, data)

    rows = [[field.zero] * n for _ in range(n)]
    for no, toks in sections["antipode"]:
        i, j = _parse_indices(toks, 2, n, no)
        rows[i][j] = _parse_scalar(field, toks[2], no)

    return cls(AlgebraData(tensor("mu"), vector("unit")),
               CoalgebraData(tensor("delta"), vector("counit")),
               Mat(field, rows))


def _field_line(field):
    return "field Q" if field == QQ else f"field F {field.p}"


def serialize_structure(H):
    f = H.field
    out = ["hopfqg" if isinstance(H, HopfQuasigroup) else "hopfcoqg",
           _field_line(f), f"dim {H.dim}"]
    n = H.dim
    for name, ten in (("mu", H.mu), ("delta", H.delta)):
        out.append(f"{name}:")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    c = ten[i][j][k]
                    if c != f.zero:
                        out.append(f"{i} {j} {k} {f.format(c)}")
    for name, vec in (("unit", H.unit), ("counit", H.counit)):
        out.append(f"{name}:")
        for i in range(n):
            if vec[i] != f.zero:
                out.append(f"{i} {f.format(vec[i])}")
    out.append("antipode:")
    for i in range(n):
        for j in range(n):
            c = H.antipode.rows[i][j]
            if c != f.zero:
                out.append(f"{i} {j} {f.format(c)}")
    return "\n".join(out) + "\n"


def parse_cayley(text):
    lines = _Lines(text)
    no, header = lines.next("loop header")
    parts = header.split()
    if len(parts) != 2 or parts[0] != "loop":
        raise ParseError(f"expected 'loop <n>', got {header!r}", no)
    try:
        n = int(parts[1])
    except ValueError as exc:
        raise ParseError(f"bad order {parts[1]!r}", no) from exc
    rows = []
    for _ in range(n):
        no, line = lines.next("Cayley row")
        toks = line.split()
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, got {len(toks)}", no)
        try:
            row = [int(t) for t in toks]
        except ValueError as exc:
            raise ParseError(f"bad table entry in {line!r}", no) from exc
        for v in row:
            if not 0 <= v < n:
                raise ParseError(f"entry {v} out of range [0, {n})", no)
        rows.append(row)
    return LoopTable(rows)


def serialize_cayley(table):
    out = [f"loop {table.n}"]
    out.extend(" ".join(str(v) for v in row) for row in table.rows)
    return "\n".join(out) + "\n"


def parse_action(text, field):
    lines = _Lines(text)
    no, header = lines.next("action header")
    parts = header.split()
    if len(parts) != 3 or parts[0] != "action":
        raise ParseError(
            f"expected 'action <H_dim> <M_dim>', got {header!r}", no)
    try:
        h_dim, m_dim = int(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ParseError(f"bad dimensions in {header!r}", no) from exc
    entries = []
    while lines.peek() is not None:
        no, line = lines.next("action entry")
        toks = line.split()
        if len(toks) != 4:
            raise ParseError(
                f"expected 'h m m2 <scalar>', got {line!r}", no)
        entries.append((_index(toks[0], h_dim, no),
                        _index(toks[1], m_dim, no),
                        _index(toks[2], m_dim, no),
                        _parse_scalar(field, toks[3], no)))
    return ActionData.from_entries(field, h_dim, m_dim, entries)


def serialize_action(act):
    f = act.field
    out = [f"action {act.h_dim} {act.m_dim}"]
    for h in range(act.h_dim):
        for m in range(act.m_dim):
            for m2 in range(act.m_dim):
                c = act.data[h][m][m2]
                if c != f.zero:
                    out.append(f"{h} {m} {m2} {f.format(c)}")
    return "\n".join(out) + "\n"


def parse_coaction(text, field):
    lines = _Lines(text)
    no, header = lines.next("coaction header")
    parts = header.split()
    if len(parts) != 3 or parts[0] != "coaction":
        raise ParseError(
            f"expected 'coaction <M_dim> <H_dim>', got {header!r}", no)
    try:
        m_dim, h_dim = int(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ParseError(f"bad dimensions in {header!r}", no) from exc
    entries = []
    while lines.peek() is not None:
        no, line = lines.next("coaction entry")
        toks = line.split()
        if len(toks) != 4:
            raise ParseError(
                f"expected 'm m2 h <scalar>', got {line!r}", no)
        entries.append((_index(toks[0], m_dim, no),
                        _index(toks[1], m_dim, no),
                        _index(toks[2], h_dim, no),
                        _parse_scalar(field, toks[3], no)))
    return CoactionData.from_entries(field, m_dim, h_dim, entries)


def serialize_coaction(coact):
    f = coact.field
    out = [f"coaction {coact.m_dim} {coact.h_dim}"]
    for m in range(coact.m_dim):
        for m2 in range(coact.m_dim):
            for h in range(coact.h_dim):
                c = coact.data[m][m2][h]
                if c != f.zero:
                    out.append(f"{m} {m2} {h} {f.format(c)}")
    return "\n".join(out) + "\n"


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def write_text(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def load_structure(path):
    return parse_structure(_read(path))


def load_cayley(path):
    return parse_cayley(_read(path))


def load_action(path, field):
    return parse_action(_read(path), field)


def load_coaction(path, field):
    return parse_coaction(_read(path), field)


def _bundle_paths(lines, base_dir, count):
    paths = []
    for _ in range(count):
        no, line = lines.next("bundle path line")
        paths.append(os.path.normpath(os.path.join(base_dir, line)))
    extra = lines.peek()
    if extra is not None:
        raise ParseError(f"trailing content {extra[1]!r}", extra[0])
    return paths


_VARIANTS = {"quasigroup": OVER_QUASIGROUP, "coquasigroup": OVER_COQUASIGROUP}


def load_dimodule_bundle(path):
    """`dimodule <variant>` plus structure, action, coaction path lines."""
    lines = _Lines(_read(path))
    no, header = lines.next("dimodule header")
    parts = header.split()
    if len(parts) != 2 or parts[0] != "dimodule" or parts[1] not in _VARIANTS:
        raise ParseError(
            "expected 'dimodule quasigroup' or 'dimodule coquasigroup', "
            f"got {header!r}", no)
    variant = _VARIANTS[parts[1]]
    h_path, act_path, coact_path = _bundle_paths(
        lines, os.path.dirname(os.path.abspath(path)), 3)
    H = load_structure(h_path)
    return LongDimodule(H,
                        load_action(act_path, H.field),
                        load_coaction(coact_path, H.field),
                        variant)


def load_smash_bundle(path):
    """`smash` / `cosmash` plus H, A/C, action/coaction path lines."""
    lines = _Lines(_read(path))
    no, header = lines.next("smash header")
    if header not in ("smash", "cosmash"):
        raise ParseError(f"expected 'smash' or 'cosmash', got {header!r}", no)
    paths = _bundle_paths(lines, os.path.dirname(os.path.abspath(path)), 3)
    H = load_structure(paths[0])
    other = load_structure(paths[1])
    if header == "smash":
        if not (isinstance(H, HopfQuasigroup)
                and isinstance(other, HopfQuasigroup)):
            raise ParseError(
                "smash bundle requires two hopfqg structures", no)
        return SmashInput(H, other, load_action(paths[2], H.field))
    if not (isinstance(H, HopfCoquasigroup)
            and isinstance(other, HopfCoquasigroup)):
        raise ParseError(
            "cosmash bundle requires two hopfcoqg structures", no)
    return CosmashInput(H, other, load_coaction(paths[2], H.field))
