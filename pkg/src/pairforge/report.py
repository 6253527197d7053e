"""Sectioned key/value reports for the command-line tool.

Every entry carries the name of the operation that produced it.  Output
contains no timings, paths or other run-dependent data, so identical input
gives byte-identical text.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional

from . import __version__
from .algebra import matrix_algebra_certificate, primitive_element, regularity_profile
from .catalog import CatalogEntry
from .centroid import (
    central_closure,
    centroid_pair,
    closure_is_closed,
    compare_closure_with_imbedding,
    extended_centroid,
    verify_centroid_iso,
)
from .errors import (
    AxiomError,
    BudgetExceeded,
    InvariantViolation,
    ParseError,
    PreconditionError,
    UnsupportedError,
)
from .fileformat import digest, format_witness
from .identities import DEFAULT_BUDGET, check_hpi, estimate_cost, pi_ideal, standard_identity
from .imbedding import build_standard_imbedding, envelope, pair_regularity, verify_round_trip
from .involutions import (
    check_algebra_involution,
    check_involution,
    extend_to_imbedding,
    is_star_prime,
    star_centroid,
    verify_star_isos,
)
from .pair import SIGNS, PairElement, check_pair_axioms, sign_name
from .polys import format_poly, irreducible_over_base
from .structure import (
    capacity,
    check_module,
    element_rank,
    is_faithful,
    martindale_posner_report,
    socle_pair,
    structure_report,
)

COMMANDS = ("validate", "imbed", "centroid", "closure", "involution", "identity", "rank", "socle", "report-all")
REPORT_ALL = ("validate", "imbed", "centroid", "closure", "involution", "identity", "rank", "socle", "pi",
              "structure", "martindale")

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_BUDGET, EXIT_INVARIANT = 0, 1, 2, 3, 4


def fmt(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(fmt(x) for x in v) + ")"
    return str(v)


@dataclass
class Section:
    name: str
    entries: list = dc_field(default_factory=list)
    error: Optional[tuple] = None   # (kind, message)

    def add(self, key: str, value, op: str):
        self.entries.append((key, fmt(value), op))


@dataclass
class Report:
    command: str
    source: str
    input_digest: str
    sections: list = dc_field(default_factory=list)
    version: str = __version__

    def render(self) -> str:
        lines = [
            "pairforge-report 1",
            f"tool_version = {self.version}",
            f"input = {self.source}",
            f"input_digest = {self.input_digest}",
            f"command = {self.command}",
        ]
        for sec in self.sections:
            lines.append("")
            lines.append(f"[{sec.name}]")
            for key, value, op in sec.entries:
                lines.append(f"{key} = {value}  @{op}")
            if sec.error is not None:
                lines.append(f"status = error  @{sec.name}")
                lines.append(f"error.kind = {sec.error[0]}  @{sec.name}")
                lines.append(f"error.message = {sec.error[1]}  @{sec.name}")
            else:
                lines.append(f"status = ok  @{sec.name}")
        return "\n".join(lines) + "\n"

    @property
    def exit_code(self) -> int:
        codes = [error_code(sec.error[0]) for sec in self.sections if sec.error is not None]
        if self.command == "report-all":
            return EXIT_INVARIANT if EXIT_INVARIANT in codes else EXIT_OK
        return max(codes, default=EXIT_OK)


_KINDS = (
    (InvariantViolation, "invariant"),
    (BudgetExceeded, "budget"),
    (AxiomError, "input"),
    (ParseError, "input"),
    (PreconditionError, "precondition"),
    (UnsupportedError, "unsupported"),
)


def error_kind(exc: Exception) -> str:
    for cls, kind in _KINDS:
        if isinstance(exc, cls):
            return kind
    return "invariant"


def error_code(kind: str) -> int:
    return {
        "input": EXIT_INPUT,
        "precondition": EXIT_PRECONDITION,
        "unsupported": EXIT_PRECONDITION,
        "budget": EXIT_BUDGET,
    }.get(kind, EXIT_INVARIANT)


@dataclass
class Options:
    standard: Optional[int] = None
    budget: Optional[int] = DEFAULT_BUDGET
    jobs: int = 1


def _element_name(s, i):
    return f"{sign_name(s)}{i}"


# --- sections ----------------------------------------------------------------

def sec_validate(entry: CatalogEntry, opts: Options, sec: Section):
    A = entry.pair
    sec.add("field", A.field, "parse_pair_file")
    sec.add("dims", A.dims, "parse_pair_file")
    res = check_pair_axioms(A)
    sec.add("axioms", res.ok, "check_pair_axioms")
    if not res.ok:
        sec.add("axioms.witness", format_witness(res.witness), "check_pair_axioms")
        raise AxiomError("pair axioms fail", res.witness)
    sec.add("involution.present", entry.involution is not None, "parse_pair_file")
    if entry.involution is not None:
        r = check_involution(A, entry.involution)
        sec.add("involution.ok", r.ok, "check_involution")
        if not r.ok:
            sec.add("involution.witness", r.witness, "check_involution")
    sec.add("module.present", entry.module is not None, "parse_pair_file")
    if entry.module is not None:
        m = entry.module
        sec.add("module.dims", (m.m_minus, m.m_plus), "parse_pair_file")
        r = check_module(m)
        sec.add("module.ok", r.ok, "check_module")
        if not r.ok:
            sec.add("module.witness", r.witness, "check_module")
        sec.add("module.faithful", is_faithful(m), "is_faithful")


def sec_imbed(entry, opts, sec):
    A = entry.pair
    emb = build_standard_imbedding(A)
    E = emb.algebra
    sec.add("algebra.dim", E.dim, "build_standard_imbedding")
    sec.add("peirce.dims", emb.dims, "build_standard_imbedding")
    n = matrix_algebra_certificate(E)
    sec.add("matrix_algebra", f"M_{n}({A.field})" if n else "none", "matrix_algebra_certificate")
    sec.add("envelope.dim", envelope(emb).dim, "envelope")
    rt = verify_round_trip(A)
    sec.add("round_trip", rt.ok, "verify_round_trip")
    prof = regularity_profile(E)
    pair_prof = pair_regularity(A)
    sec.add("semiprime", prof.semiprime, "regularity_profile")
    sec.add("prime", prof.prime, "regularity_profile")
    sec.add("radical.dim", prof.radical_dim, "radical")
    sec.add("center.dim", prof.center_dim, "center")
    sec.add("transfer", (pair_prof.semiprime, pair_prof.prime) == (prof.semiprime, prof.prime), "pair_regularity")


def sec_centroid(entry, opts, sec):
    A = entry.pair
    C = centroid_pair(A)
    sec.add("dim", C.dim, "centroid_pair")
    sec.add("commutative", C.is_commutative(), "centroid_pair")
    status = C.is_field()
    sec.add("field", "undecided" if status is None else status, "is_field_algebra")
    if status:
        x, m = primitive_element(C.structure)
        sec.add("field.modulus", format_poly(m), "primitive_element")
        sec.add("field.irreducible", irreducible_over_base(m), "irreducible_over_base")
        S = C.structure
        inverted = all(C.inverse(S.basis_vector(i)) is not None for i in range(S.dim))
        sec.add("field.basis_inverted", inverted, "CentroidRing.inverse")
    if not pair_regularity(A).semiprime:
        raise PreconditionError("extended centroid and the isomorphism with C(E) need a semiprime pair")
    ext = extended_centroid(A)
    sec.add("regular", len(ext.witnesses) == C.dim, "extended_centroid")
    for i, mu in enumerate(ext.witnesses):
        sec.add(f"regular.witness.{i}", mu, "CentroidRing.regularity_witness")
    iso = verify_centroid_iso(A)
    sec.add("iso.dims", (iso.pair_dim, iso.algebra_dim), "verify_centroid_iso")
    sec.add("iso", iso.ok, "verify_centroid_iso")
    if not iso.ok:
        raise InvariantViolation("centroid isomorphism failed", iso.failures)


def sec_closure(entry, opts, sec):
    A = entry.pair
    closed = central_closure(A)
    sec.add("field", closed.closure_field, "central_closure")
    sec.add("modulus", format_poly(closed.minimal_polynomial), "central_closure")
    sec.add("k_dims", closed.k_dims, "central_closure")
    sec.add("tight", closed.tight(), "ClosedPair.tight")
    closed_ok = closure_is_closed(closed)
    sec.add("closed", closed_ok, "closure_is_closed")
    comm = compare_closure_with_imbedding(closed)
    sec.add("imbedding.k_dims", (comm.k_dim_left, comm.k_dim_right), "compare_closure_with_imbedding")
    sec.add("imbedding.commutes", comm.ok, "compare_closure_with_imbedding")
    if not (comm.ok and closed_ok):
        raise InvariantViolation("central closure checks failed", comm.failures)


def sec_involution(entry, opts, sec):
    A, inv = entry.pair, entry.involution
    if inv is None:
        raise PreconditionError("no involution supplied")
    res = check_involution(A, inv)
    sec.add("ok", res.ok, "check_involution")
    if not res.ok:
        sec.add("witness", res.witness, "check_involution")
        raise PreconditionError("matrices do not define an involution")
    emb = build_standard_imbedding(A)
    J = extend_to_imbedding(emb, inv)
    sec.add("extension.anti_automorphism", check_algebra_involution(emb.algebra, J).ok, "extend_to_imbedding")
    sec.add("extension.swaps_idempotents", J.apply(emb.e1, A.field) == emb.e2, "extend_to_imbedding")
    if not pair_regularity(A).semiprime:
        raise PreconditionError("the *-centroid needs a semiprime pair")
    sc = star_centroid(A, inv)
    sec.add("star_centroid.dim", sc.dim, "star_centroid")
    sec.add("star_centroid.field", "undecided" if sc.is_field is None else sc.is_field, "star_centroid")
    sec.add("star_prime", is_star_prime(A, inv), "is_star_prime")
    rep = verify_star_isos(A, inv)
    sec.add("iso.dims", (rep.pair_dim, rep.algebra_dim), "verify_star_isos")
    sec.add("iso", rep.ok, "verify_star_isos")
    if rep.closure is not None:
        sec.add("closure.k_dims", (rep.closure.k_dim_left, rep.closure.k_dim_right), "verify_star_isos")
        sec.add("closure.commutes", rep.closure.ok, "verify_star_isos")
    if not rep.ok:
        raise InvariantViolation("*-centroid isomorphism failed", rep.failures)


def _hpi_lines(sec, A, n, opts):
    f = standard_identity(n)
    cost = estimate_cost(A, f)
    sec.add(f"S{n}.estimate", cost, "estimate_cost")
    res = check_hpi(A, f, budget=opts.budget, jobs=opts.jobs)
    sec.add(f"S{n}", res.holds, "check_hpi")
    if res.witness is not None:
        w = res.witness
        sec.add(f"S{n}.witness.sign", sign_name(w.sign), "check_hpi")
        sec.add(f"S{n}.witness.args", w.args, "check_hpi")
        sec.add(f"S{n}.witness.z_multiset", w.z_multiset, "check_hpi")
        sec.add(f"S{n}.witness.z", w.z, "check_hpi")
        sec.add(f"S{n}.witness.value", w.value, "check_hpi")
    return res.holds


def sec_identity(entry, opts, sec):
    A = entry.pair
    sec.add("budget", opts.budget, "check_hpi")
    if opts.standard is not None:
        _hpi_lines(sec, A, opts.standard, opts)
        return
    top = max(A.dims) + 1
    least = None
    for n in range(1, top + 1):
        if _hpi_lines(sec, A, n, opts):
            least = n
            break
    sec.add("least_degree", least, "least_hpi_degree")


def sec_rank(entry, opts, sec):
    A = entry.pair
    sec.add("source", "module" if entry.module is not None else "local algebra", "element_rank")
    for s in SIGNS:
        for i in range(A.dim(s)):
            try:
                r = element_rank(A, PairElement.basis(A, s, i), entry.module)
            except UnsupportedError as exc:
                r = f"unsupported ({exc})"
            sec.add(f"rank.{_element_name(s, i)}", r, "element_rank")
    sec.add("capacity", capacity(A, entry.module), "capacity")


def sec_socle(entry, opts, sec):
    soc = socle_pair(entry.pair)
    sec.add("dims", soc.dims, "socle_pair")
    sec.add("whole", soc.is_whole(), "socle_pair")


def sec_pi(entry, opts, sec):
    rep = pi_ideal(entry.pair, entry.module)
    sec.add("whole", rep.is_whole, "pi_ideal")
    for (s, i), d in sorted(rep.min_standard_degree.items(), key=lambda kv: (-kv[0][0], kv[0][1])):
        sec.add(f"local_degree.{_element_name(s, i)}", d, "local_min_standard_degree")
    sec.add("transfer", rep.transfer_ok, "pi_ideal")
    sec.add("capacity", rep.capacity if rep.capacity is not None else rep.capacity_note, "capacity")
    if not rep.transfer_ok:
        raise InvariantViolation("PI(A) differs from PI(E) meet A")


def sec_structure(entry, opts, sec):
    r = structure_report(entry.pair, entry.module)
    sec.add("semiprime", r.semiprime, "structure_report")
    sec.add("prime", r.prime, "structure_report")
    sec.add("primitive", r.primitive, "structure_report")
    sec.add("strongly_primitive", r.strongly_primitive, "structure_report")
    sec.add("socle_dims", r.socle_dims, "socle_pair")
    sec.add("capacity", r.capacity, "capacity")
    sec.add("simple", r.simple, "is_simple")
    sec.add("amitsur", r.amitsur, "structure_report")
    sec.add("amitsur.agree", r.amitsur_agree, "structure_report")
    sec.add("strong_primitivity_transfer", r.strong_primitivity_transfer, "structure_report")
    sec.add("kaplansky", r.kaplansky, "structure_report")
    for k, note in enumerate(r.notes):
        sec.add(f"note.{k}", note, "structure_report")


def sec_martindale(entry, opts, sec):
    r = martindale_posner_report(entry.pair, budget=opts.budget, jobs=opts.jobs)
    sec.add("closure.field", r.closure_field, "central_closure")
    sec.add("closure.k_dims", r.closure_dims, "central_closure")
    sec.add("hpi_degree", r.hpi_degree, "least_hpi_degree")
    sec.add("closure.capacity", r.capacity, "capacity")
    sec.add("bound", r.bound, "martindale_posner_report")
    sec.add("closure.simple", r.closure_simple, "is_simple")
    sec.add("closure.socle_whole", r.closure_socle_whole, "socle_pair")
    sec.add("closure.strongly_primitive", r.closure_strongly_primitive, "structure_report")
    sec.add("pi_is_intersection", r.pi_is_intersection, "martindale_posner_report")
    sec.add("ok", r.ok, "martindale_posner_report")
    if not r.ok:
        raise InvariantViolation("Martindale/Posner checks failed", r.failures)


SECTIONS = {
    "validate": sec_validate,
    "imbed": sec_imbed,
    "centroid": sec_centroid,
    "closure": sec_closure,
    "involution": sec_involution,
    "identity": sec_identity,
    "rank": sec_rank,
    "socle": sec_socle,
    "pi": sec_pi,
    "structure": sec_structure,
    "martindale": sec_martindale,
}


def run_section(name: str, entry: CatalogEntry, opts: Options) -> Section:
    sec = Section(name)
    try:
        SECTIONS[name](entry, opts, sec)
    except BudgetExceeded as exc:
        sec.error = ("budget", f"refused: estimated {exc.estimate} evaluations exceeds budget {exc.budget}")
    except Exception as exc:  # every failure is recorded in its own section
        sec.error = (error_kind(exc), str(exc) or type(exc).__name__)
    return sec


def run_report(command: str, entry: CatalogEntry, opts: Optional[Options] = None) -> Report:
    if command not in COMMANDS:
        raise ParseError(f"unknown command {command!r}")
    opts = opts or Options()
    rep = Report(command, entry.name, digest(entry.pair, entry.involution, entry.module))
    names = REPORT_ALL if command == "report-all" else ("validate", command) if command != "validate" else ("validate",)
    for name in names:
        sec = run_section(name, entry, opts)
        rep.sections.append(sec)
        if command != "report-all" and sec.error is not None:
            break
    return rep
