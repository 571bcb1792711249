"""3SAT to biclique containment: a formula maps to a graph G and a vertex
subset V' such that the formula is satisfiable iff some maximal biclique of G
lies entirely inside V'.

The gadget takes one vertex per literal (x_i adjacent to its negation), one
per clause (adjacent to exactly the literals it contains), and one universal
vertex u; V' is u plus the literal vertices.  The construction needs the
formula normalized first: no tautological clause, every variable used, and
no two clauses sharing more than one literal.

Literals follow the DIMACS convention: nonzero signed ints, variable numbers
1..num_vars.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    CapacityError,
    Graph,
    InputError,
    bits,
    cb_sides,
    contains_induced_c4,
    contains_k4,
    is_maximal_cb,
    vertex_set,
)

TRUTH_TABLE_CAP = 20  # exhaustive satisfiability check


@dataclass(frozen=True)
class CnfFormula:
    """CNF with at most three literals per clause."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.num_vars < 0:
            raise InputError("variable count must be non-negative")
        for clause in self.clauses:
            if len(clause) > 3:
                raise InputError(f"clause {clause} has more than 3 literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise InputError(
                        f"literal {lit} outside 1..{self.num_vars}")

    @staticmethod
    def of(num_vars: int, clauses) -> "CnfFormula":
        return CnfFormula(num_vars, tuple(tuple(c) for c in clauses))


def evaluate(f: CnfFormula, assignment) -> bool:
    """True iff the 0-indexed boolean assignment satisfies every clause."""
    values = tuple(assignment)
    if len(values) != f.num_vars:
        raise InputError(
            f"assignment has {len(values)} values for {f.num_vars} variables")
    return all(
        any(values[abs(lit) - 1] == (lit > 0) for lit in clause)
        for clause in f.clauses)


def find_satisfying_assignment(f: CnfFormula):
    """First satisfying assignment by truth table, or None."""
    if f.num_vars > TRUTH_TABLE_CAP:
        raise CapacityError(
            f"truth table capped at {TRUTH_TABLE_CAP} variables, "
            f"got {f.num_vars}")
    for m in range(1 << f.num_vars):
        values = tuple(bool(m >> i & 1) for i in range(f.num_vars))
        if evaluate(f, values):
            return values
    return None


# ---------------------------------------------------------------------------
# normalization

def _shared(ci, cj) -> int:
    return len(set(ci) & set(cj))


def normalization_violations(f: CnfFormula) -> list[str]:
    """Human-readable list of normalization violations (empty if normalized)."""
    out = []
    used = set()
    for idx, clause in enumerate(f.clauses):
        if not clause:
            out.append(f"clause {idx} is empty")
        lits = set(clause)
        if any(-lit in lits for lit in lits):
            out.append(f"clause {idx} contains a variable and its negation")
        used.update(abs(lit) for lit in clause)
    for v in range(1, f.num_vars + 1):
        if v not in used:
            out.append(f"variable {v} occurs in no clause")
    for i, j in combinations(range(len(f.clauses)), 2):
        if _shared(f.clauses[i], f.clauses[j]) >= 2:
            out.append(f"clauses {i} and {j} share two or more literals")
    return out


def is_normalized(f: CnfFormula) -> bool:
    return not normalization_violations(f)


def check_normalized(f: CnfFormula) -> None:
    violations = normalization_violations(f)
    if violations:
        raise InputError("formula is not normalized: " + "; ".join(violations))


def _rewrite_clause(clause, next_var: int):
    """Equisatisfiable replacement of one clause by four over three fresh
    variables.  For (l1, l2, l3) and fresh a, b, c:

        (l1, a, b) (l2, a, -b) (l2, -a, c) (l3, -a, -c)

    Fresh variables never recur elsewhere, so a new clause shares at most one
    literal with any clause outside its own replacement.  Two-literal clauses
    are padded by doubling the middle literal, which leaves the last two
    replacement clauses sharing (l2, -a); that one internal conflict is
    rewritten on the next fixpoint pass and, having three distinct literals,
    cannot cascade further.  Unit clauses cannot conflict in the first place.
    """
    lits = list(clause)
    if len(lits) == 2:
        lits = [lits[0], lits[1], lits[1]]
    l1, l2, l3 = lits
    a, b, c = next_var, next_var + 1, next_var + 2
    return [(l1, a, b), (l2, a, -b), (l2, -a, c), (l3, -a, -c)]


def normalize(f: CnfFormula) -> CnfFormula:
    """Equisatisfiable normalized formula.

    Steps: delete tautological clauses and duplicate literals inside a
    clause; rewrite clause pairs sharing two or more literals (always the
    later clause of the first offending pair in scan order, re-scanning to a
    fixpoint); finally drop unused variables, remapping indices downward.
    An empty clause is rejected as trivially unsatisfiable.
    """
    clauses: list[tuple[int, ...]] = []
    for clause in f.clauses:
        if not clause:
            raise InputError("empty clause is trivially unsatisfiable")
        lits = set(clause)
        if any(-lit in lits for lit in lits):
            continue  # tautology, always satisfied
        clauses.append(tuple(sorted(lits, key=lambda l: (abs(l), l < 0))))
    num_vars = f.num_vars

    while True:
        conflict = next(
            ((i, j) for i, j in combinations(range(len(clauses)), 2)
             if _shared(clauses[i], clauses[j]) >= 2),
            None)
        if conflict is None:
            break
        _, j = conflict
        replacement = _rewrite_clause(clauses[j], num_vars + 1)
        num_vars += 3
        clauses[j:j + 1] = [tuple(c) for c in replacement]

    used = sorted({abs(lit) for clause in clauses for lit in clause})
    remap = {old: new for new, old in enumerate(used, start=1)}
    remapped = tuple(
        tuple((1 if lit > 0 else -1) * remap[abs(lit)] for lit in clause)
        for clause in clauses)
    result = CnfFormula(len(used), remapped)
    check_normalized(result)
    return result


# ---------------------------------------------------------------------------
# instance construction

@dataclass(frozen=True)
class ReductionInstance:
    """Gadget graph with the designated subset V' and per-vertex roles.

    Layout: u = 0; variable i (1-based) has its positive literal at vertex
    2i-1 and its negation at 2i; clause j (1-based) sits at 2*num_vars + j.
    roles[v] is "u", "x3", "~x3", or "c2" accordingly.
    """

    graph: Graph
    v_prime: tuple[int, ...]
    roles: tuple[str, ...]


def literal_vertex(lit: int) -> int:
    """Vertex index of a DIMACS literal in the gadget layout."""
    v = abs(lit)
    return 2 * v - 1 if lit > 0 else 2 * v


def build_instance(f: CnfFormula) -> ReductionInstance:
    """Gadget for a normalized formula.

    |V| = 2*num_vars + num_clauses + 1 and V' = {u} + literal vertices.
    The graph is K4-free and induced-C4-free by construction; tests assert
    both via the generic finders.
    """
    check_normalized(f)
    nv, m = f.num_vars, len(f.clauses)
    n = 2 * nv + m + 1
    edges = [(0, v) for v in range(1, n)]  # u is universal
    edges += [(2 * i - 1, 2 * i) for i in range(1, nv + 1)]
    for j, clause in enumerate(f.clauses, start=1):
        cv = 2 * nv + j
        edges += [(literal_vertex(lit), cv) for lit in set(clause)]
    roles = ["u"]
    for i in range(1, nv + 1):
        roles += [f"x{i}", f"~x{i}"]
    roles += [f"c{j}" for j in range(1, m + 1)]
    graph = Graph.from_edges(n, edges, label=f"sat_gadget_v{nv}_c{m}")
    return ReductionInstance(graph, tuple(range(2 * nv + 1)), tuple(roles))


def instance_to_dict(inst: ReductionInstance) -> dict:
    from .graphs import graph_to_dict

    d = graph_to_dict(inst.graph)
    d["v_prime"] = list(inst.v_prime)
    d["roles"] = {str(v): role for v, role in enumerate(inst.roles)}
    return d


def write_instance(inst: ReductionInstance, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(instance_to_dict(inst), fh, indent=1)
        fh.write("\n")


# ---------------------------------------------------------------------------
# containment and certification

def biclique_containment(g: Graph, v_prime):
    """Lexicographically smallest maximal biclique of g lying inside
    v_prime, or None.  Scans all subsets of v_prime; maximality is checked
    against the whole of g."""
    vp = vertex_set(v_prime, g.n)
    if len(vp) > 22:
        raise CapacityError(
            f"containment scan is capped at |V'| <= 22, got {len(vp)}")
    vp_bits = [1 << v for v in vp]
    best = None
    for m in range(3, 1 << len(vp)):
        if m.bit_count() < 2:
            continue
        smask = 0
        for idx in bits(m):
            smask |= vp_bits[idx]
        if cb_sides(g.adj, smask) is None or not is_maximal_cb(g.adj, smask):
            continue
        vs = tuple(bits(smask))
        if best is None or vs < best:
            best = vs
    return best


def decode_assignment(inst: ReductionInstance, witness):
    """Boolean assignment read off a biclique witness containing u: variable
    i is true iff the x_i vertex is in the witness.  Returns None unless the
    witness contains u and exactly one literal vertex per variable."""
    wset = set(witness)
    if 0 not in wset:
        return None
    nv = (len(inst.v_prime) - 1) // 2
    values = []
    for i in range(1, nv + 1):
        pos, neg = 2 * i - 1 in wset, 2 * i in wset
        if pos == neg:
            return None
        values.append(pos)
    return tuple(values)


@dataclass(frozen=True)
class ReductionReport:
    """Everything certify_reduction checked, bundled for serialization."""

    num_vars: int
    num_clauses: int
    satisfiable: bool
    assignment: tuple[bool, ...] | None
    containment: bool
    witness: tuple[int, ...] | None
    equivalent: bool
    k4_free: bool
    c4_free: bool
    decoded_assignment: tuple[bool, ...] | None
    correspondence_ok: bool

    def to_dict(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "num_clauses": self.num_clauses,
            "satisfiable": self.satisfiable,
            "assignment": list(self.assignment) if self.assignment else None,
            "containment": self.containment,
            "witness": list(self.witness) if self.witness else None,
            "equivalent": self.equivalent,
            "k4_free": self.k4_free,
            "c4_free": self.c4_free,
            "decoded_assignment": (list(self.decoded_assignment)
                                   if self.decoded_assignment else None),
            "correspondence_ok": self.correspondence_ok,
        }


def certify_reduction(f: CnfFormula) -> ReductionReport:
    """End-to-end check of the reduction on one normalized formula: compare
    truth-table satisfiability against biclique containment, confirm the
    gadget is K4-free and induced-C4-free, and when a witness exists decode
    it back to an assignment and re-evaluate the formula with it."""
    check_normalized(f)
    inst = build_instance(f)
    assignment = find_satisfying_assignment(f)
    witness = biclique_containment(inst.graph, inst.v_prime)
    decoded = decode_assignment(inst, witness) if witness else None
    correspondence = decoded is not None and evaluate(f, decoded) \
        if witness else assignment is None
    return ReductionReport(
        num_vars=f.num_vars,
        num_clauses=len(f.clauses),
        satisfiable=assignment is not None,
        assignment=assignment,
        containment=witness is not None,
        witness=witness,
        equivalent=(assignment is not None) == (witness is not None),
        k4_free=contains_k4(inst.graph) is None,
        c4_free=contains_induced_c4(inst.graph) is None,
        decoded_assignment=decoded,
        correspondence_ok=bool(correspondence),
    )


# ---------------------------------------------------------------------------
# DIMACS

def read_dimacs(path: str) -> CnfFormula:
    """Parse DIMACS CNF: a "p cnf V C" header, 'c' comment lines, and
    zero-terminated clauses that may span lines."""
    num_vars = num_clauses = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("c") or line.startswith("%"):
                continue
            if line.startswith("p"):
                parts = line.split()
                if (len(parts) != 4 or parts[1] != "cnf" or num_vars is not None):
                    raise InputError(f"{path}: line {lineno}: bad header {line!r}")
                try:
                    num_vars, num_clauses = int(parts[2]), int(parts[3])
                except ValueError as e:
                    raise InputError(
                        f"{path}: line {lineno}: bad header {line!r}") from e
                continue
            if num_vars is None:
                raise InputError(
                    f"{path}: line {lineno}: clause before 'p cnf' header")
            for tok in line.split():
                try:
                    lit = int(tok)
                except ValueError as e:
                    raise InputError(
                        f"{path}: line {lineno}: bad literal {tok!r}") from e
                if lit == 0:
                    clauses.append(tuple(pending))
                    pending = []
                elif abs(lit) > num_vars:
                    raise InputError(
                        f"{path}: line {lineno}: literal {lit} exceeds "
                        f"declared {num_vars} variables")
                else:
                    pending.append(lit)
    if num_vars is None:
        raise InputError(f"{path}: missing 'p cnf' header")
    if pending:
        raise InputError(f"{path}: trailing clause without terminating 0")
    if len(clauses) != num_clauses:
        raise InputError(
            f"{path}: header declares {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula.of(num_vars, clauses)


def write_dimacs(f: CnfFormula, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(f"p cnf {f.num_vars} {len(f.clauses)}\n")
        for clause in f.clauses:
            fh.write(" ".join(str(lit) for lit in clause) + " 0\n")
