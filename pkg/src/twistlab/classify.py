"""Isomorphism classes of the 4-dimensional products and the orbit census.

Four reference classes over a field of characteristic != 2:

  I    k^4                          commutative, semisimple
  IIa  2x2 matrix ring              central simple
  IIb  round-trip quiver mod J^2    radical of dimension 2
  III  three-vertex one-arrow path  radical of dimension 1, center of 2

Each class is pinned by a basis-independent fingerprint, so membership is
decided by computing invariants, never by searching for an isomorphism.
"""

from dataclasses import dataclass

from .fields import Field
from .linalg import Matrix
from .algebra import (
    Algebra,
    center,
    is_commutative,
    is_separable,
    radical_power_dims,
    standard_algebra,
)
from .twisting import (
    TwistFamilyDescriptor,
    census_rows,
    family_member,
    twisted_product,
)

CLASS_ORDER = ("I", "IIa", "IIb", "III", "unknown")

CHAR2_NOTE = (
    "the four-class table assumes characteristic != 2; "
    "char-2 census members are reported as unknown"
)


@dataclass(frozen=True)
class Fingerprint:
    """Basis-independent discriminating data of a finite-dim algebra."""

    dim: int
    commutative: bool
    center_dim: int
    radical_dims: tuple
    separable: bool

    def to_doc(self) -> dict:
        return {
            "dim": self.dim,
            "commutative": self.commutative,
            "center_dim": self.center_dim,
            "radical_dims": list(self.radical_dims),
            "separable": self.separable,
        }


REFERENCE_FINGERPRINTS = {
    "I": Fingerprint(4, True, 4, (), True),
    "IIa": Fingerprint(4, False, 1, (), True),
    "IIb": Fingerprint(4, False, 1, (2, 0), False),
    "III": Fingerprint(4, False, 2, (1, 0), False),
}


def fingerprint(a: Algebra) -> Fingerprint:
    return Fingerprint(
        a.dim,
        is_commutative(a),
        len(center(a)),
        tuple(radical_power_dims(a)),
        is_separable(a),
    )


def classify_4dim(a: Algebra) -> str:
    """Class label of a 4-dim algebra, or "unknown" outside the table."""
    if a.dim != 4:
        raise ValueError("the class table covers dimension 4 only")
    if a.field.characteristic == 2:
        return "unknown"
    fp = fingerprint(a)
    for label, ref in REFERENCE_FINGERPRINTS.items():
        if fp == ref:
            return label
    return "unknown"


def is_isomorphism(p: Matrix, a: Algebra, b: Algebra) -> bool:
    """True iff column j of p, read as the image of a's j-th basis vector
    in b's coordinates, defines an algebra isomorphism a -> b."""
    if a.field != b.field or p.field != a.field:
        raise ValueError("field mismatch")
    if a.dim != b.dim or p.rows != a.dim or p.cols != a.dim:
        raise ValueError("need a square matrix matching both dimensions")
    if p.inverse() is None:
        return False
    if p.apply(a.unit) != b.unit:
        return False
    d = a.dim
    images = [[p.data[r][j] for r in range(d)] for j in range(d)]
    for i in range(d):
        for j in range(d):
            if p.apply(a.table[i][j]) != b.multiply_coords(images[i], images[j]):
                return False
    return True


def _from_columns(f: Field, cols: list) -> Matrix:
    d = len(cols)
    m = Matrix(f, d, d)
    for c, col in enumerate(cols):
        for r, x in enumerate(col):
            m.data[r][c] = x
    return m


def reference_isomorphism(name: str, field: Field, q=None) -> tuple:
    """One of the fixed explicit isomorphisms, as (matrix, source, target).

    aq_to_matrix(q): A_q -> 2x2 matrices via a -> diag(1,-1) and
        b -> [[q/2, (2-q)/2], [(2+q)/2, -q/2]]; the induced linear map is
        singular exactly at q = 2 and q = -2, where it is rejected.
    a_minus2_to_a2: A_{-2} -> A_2 via a -> b - 2a, b -> a, ab -> -ab.
    r_to_a_minus2: round-trip-mod-J^2 -> A_{-2} via the idempotent pair
        (1 -+ a)/2 and the radical images (1 + a)(1 + b)/4, (1 - a)(1 - b)/4.
    """
    f = field
    if f.characteristic == 2:
        raise ValueError("the reference isomorphisms need characteristic != 2")
    z, o = f.zero, f.one
    half = f.inv(f.scalar(2))
    if name == "aq_to_matrix":
        if q is None:
            raise ValueError("aq_to_matrix needs the parameter q")
        qv = f.scalar(q)
        if f.mul(qv, qv) == f.scalar(4):
            raise ValueError(
                "no isomorphism at q = 2 or q = -2: "
                "the induced linear map is singular there"
            )
        src = standard_algebra("a_q", f, q=q)
        tgt = standard_algebra("matrix2", f)
        qh = f.mul(qv, half)
        xh = f.mul(f.sub(f.scalar(2), qv), half)
        yh = f.mul(f.add(f.scalar(2), qv), half)
        cols = [
            [o, z, z, o],
            [o, z, z, f.neg(o)],
            [qh, xh, yh, f.neg(qh)],
            [qh, xh, f.neg(yh), qh],
        ]
        return _from_columns(f, cols), src, tgt
    if q is not None:
        raise ValueError(f"{name} takes no parameter")
    if name == "a_minus2_to_a2":
        src = standard_algebra("a_q", f, q=-2)
        tgt = standard_algebra("a_q", f, q=2)
        cols = [
            [o, z, z, z],
            [z, f.scalar(-2), o, z],
            [z, o, z, z],
            [z, z, z, f.neg(o)],
        ]
        return _from_columns(f, cols), src, tgt
    if name == "r_to_a_minus2":
        src = standard_algebra("truncated_roundtrip", f)
        tgt = standard_algebra("a_q", f, q=-2)
        h = half
        u = f.mul(half, half)
        cols = [
            [h, f.neg(h), z, z],
            [h, h, z, z],
            [u, u, u, u],
            [u, f.neg(u), f.neg(u), u],
        ]
        return _from_columns(f, cols), src, tgt
    raise ValueError(f"unknown reference isomorphism {name!r}")


@dataclass(frozen=True)
class OrbitEntry:
    """One census member with its class label; scalars kept as strings."""

    family: str
    parameter: str
    p: str
    q: str
    r: str
    s: str
    invertible: bool
    label: str


@dataclass
class OrbitReport:
    field_name: str
    characteristic: int
    entries: list
    class_counts: dict
    note: str = None

    def to_doc(self) -> dict:
        doc = {
            "field": self.field_name,
            "characteristic": self.characteristic,
            "entries": [
                {
                    "family": e.family,
                    "parameter": e.parameter,
                    "p": e.p, "q": e.q, "r": e.r, "s": e.s,
                    "invertible": e.invertible,
                    "class": e.label,
                }
                for e in self.entries
            ],
            "class_counts": dict(self.class_counts),
        }
        if self.note is not None:
            doc["note"] = self.note
        return doc


def _count_labels(entries: list) -> dict:
    counts = {}
    for label in CLASS_ORDER:
        n = sum(1 for e in entries if e.label == label)
        if n:
            counts[label] = n
    return counts


def _char0_report() -> "OrbitReport":
    from .fields import QQ

    f = QQ
    z2a = standard_algebra("group_algebra_z2", f)
    z2b = standard_algebra("group_algebra_z2", f)

    def product_of(family: str, parameter=None) -> Algebra:
        d = TwistFamilyDescriptor(family, parameter)
        return twisted_product(family_member(d, z2a, z2b))

    def s(x):
        return f.scalar_to_str(f.scalar(x))

    entries = [
        OrbitEntry("flip", "-", s(0), s(0), s(0), s(1), True,
                   classify_4dim(product_of("flip"))),
    ]
    # every alpha with alpha^2 != 4 admits the matrix-units isomorphism,
    # so spot samples stand in for the whole punctured line
    generic = {classify_4dim(product_of("line_char_ne_2", alpha))
               for alpha in (0, 1, 3, -1, 5)}
    if len(generic) != 1:
        raise RuntimeError("punctured-line samples disagree on the class")
    entries.append(OrbitEntry("line_char_ne_2", "alpha^2 != 4", "alpha",
                              s(0), s(0), s(-1), True, generic.pop()))
    for alpha in (2, -2):
        entries.append(OrbitEntry(
            "line_char_ne_2", s(alpha), s(alpha), s(0), s(0), s(-1), True,
            classify_4dim(product_of("line_char_ne_2", alpha))))
    for fam in ("isolated_iii", "isolated_iv", "isolated_v", "isolated_vi"):
        t = family_member(TwistFamilyDescriptor(fam), z2a, z2b)
        pv, qv, rv, sv = (t.matrix.data[r][3] for r in range(4))
        entries.append(OrbitEntry(
            fam, "-", f.scalar_to_str(pv), f.scalar_to_str(qv),
            f.scalar_to_str(rv), f.scalar_to_str(sv), False,
            classify_4dim(twisted_product(t))))
    return OrbitReport(f.name, 0, entries, _count_labels(entries))


def orbit_report(field: Field) -> OrbitReport:
    """Classify the whole census over the given field.

    Finite prime fields up to p = 13 are enumerated exhaustively; over a
    characteristic-0 field the line family is reported as one generic entry
    plus its two special points.  Char-2 entries get the label unknown.
    """
    f = field
    if f.characteristic == 0:
        return _char0_report()
    if f.characteristic > 13:
        raise ValueError("orbit report covers prime fields up to p = 13")
    char2 = f.characteristic == 2
    entries = []
    for row in census_rows(f):
        label = "unknown" if char2 else classify_4dim(twisted_product(row["map"]))
        par = row["parameter"]
        entries.append(OrbitEntry(
            row["family"],
            "-" if par is None else f.scalar_to_str(par),
            f.scalar_to_str(row["p"]), f.scalar_to_str(row["q"]),
            f.scalar_to_str(row["r"]), f.scalar_to_str(row["s"]),
            row["invertible"], label,
        ))
    return OrbitReport(
        f.name, f.characteristic, entries, _count_labels(entries),
        note=CHAR2_NOTE if char2 else None,
    )


ORBIT_TSV_HEADER = "family\tparameter\tp\tq\tr\ts\tinvertible\tclass"


def orbit_tsv(report: OrbitReport) -> str:
    lines = [ORBIT_TSV_HEADER]
    for e in report.entries:
        lines.append("\t".join([
            e.family, e.parameter, e.p, e.q, e.r, e.s,
            "yes" if e.invertible else "no", e.label,
        ]))
    return "\n".join(lines) + "\n"


def parse_orbit_tsv(text: str) -> list:
    lines = [l for l in text.strip().split("\n") if l]
    if lines[0] != ORBIT_TSV_HEADER:
        raise ValueError("bad orbit header")
    entries = []
    for line in lines[1:]:
        fam, par, pv, qv, rv, sv, inv, label = line.split("\t")
        entries.append(OrbitEntry(fam, par, pv, qv, rv, sv, inv == "yes", label))
    return entries
