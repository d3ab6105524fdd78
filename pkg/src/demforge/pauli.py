"""Signed n-qubit Pauli operators in symplectic bit representation, plus
stabilizer-tableau simulation of Clifford circuits.

A Pauli is stored as two bit-packed integers (x bits, z bits; qubit k is bit
k) together with a phase exponent ``phase`` such that the operator equals
``i**phase * W_0 (x) W_1 (x) ...`` where ``W_k`` is I, X, Y or Z according to
(x_k, z_k) = (0,0), (1,0), (1,1), (0,1).  With this convention a Hermitian
signed Pauli always has phase 0 (sign +1) or 2 (sign -1).
"""

from __future__ import annotations

from dataclasses import dataclass, field


ONE_QUBIT_GATES = ("I", "H", "S", "S_DAG", "X", "Y", "Z")
TWO_QUBIT_GATES = ("CX", "CZ", "SWAP")

_GATE_ARITY = {name: 1 for name in ONE_QUBIT_GATES}
_GATE_ARITY.update({name: 2 for name in TWO_QUBIT_GATES})

_GATE_INVERSE = {name: name for name in _GATE_ARITY}
_GATE_INVERSE["S"] = "S_DAG"
_GATE_INVERSE["S_DAG"] = "S"

_CHAR_TO_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_TO_CHAR = {v: k for k, v in _CHAR_TO_BITS.items()}


class PauliError(ValueError):
    pass


@dataclass(frozen=True)
class PauliString:
    """A signed (or more generally i^k-phased) n-qubit Pauli operator."""

    num_qubits: int
    x: int = 0
    z: int = 0
    phase: int = 0

    def __post_init__(self):
        mask = (1 << self.num_qubits) - 1
        if self.x & ~mask or self.z & ~mask:
            raise PauliError("bit indices exceed num_qubits")
        if not 0 <= self.phase <= 3:
            object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def from_label(cls, label: str, sign: int = 1) -> "PauliString":
        """Build from a string like "XIZ" (leftmost character is qubit 0)."""
        x = z = 0
        for k, ch in enumerate(label):
            try:
                xb, zb = _CHAR_TO_BITS[ch]
            except KeyError:
                raise PauliError(f"bad Pauli character {ch!r}") from None
            x |= xb << k
            z |= zb << k
        if sign not in (1, -1):
            raise PauliError("sign must be +1 or -1")
        return cls(len(label), x, z, 0 if sign == 1 else 2)

    @classmethod
    def identity(cls, num_qubits: int) -> "PauliString":
        return cls(num_qubits)

    @classmethod
    def single(cls, num_qubits: int, qubit: int, kind: str, sign: int = 1) -> "PauliString":
        xb, zb = _CHAR_TO_BITS[kind]
        return cls(num_qubits, xb << qubit, zb << qubit, 0 if sign == 1 else 2)

    def label(self) -> str:
        chars = []
        for k in range(self.num_qubits):
            chars.append(_BITS_TO_CHAR[((self.x >> k) & 1, (self.z >> k) & 1)])
        return "".join(chars)

    def __str__(self):
        prefix = {0: "+", 1: "+i", 2: "-", 3: "-i"}[self.phase]
        return prefix + self.label()

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    @property
    def is_hermitian(self) -> bool:
        return self.phase in (0, 2)

    @property
    def sign(self) -> int:
        """+1 or -1 for a Hermitian Pauli."""
        if not self.is_hermitian:
            raise PauliError(f"{self} is not Hermitian")
        return 1 if self.phase == 0 else -1

    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def support(self) -> tuple[int, ...]:
        bits = self.x | self.z
        return tuple(k for k in range(self.num_qubits) if (bits >> k) & 1)

    def unsigned(self) -> "PauliString":
        return PauliString(self.num_qubits, self.x, self.z, 0)

    def negate(self) -> "PauliString":
        return PauliString(self.num_qubits, self.x, self.z, (self.phase + 2) % 4)

    def times_i(self, k: int = 1) -> "PauliString":
        return PauliString(self.num_qubits, self.x, self.z, (self.phase + k) % 4)

    def embed(self, num_qubits: int, positions: tuple[int, ...]) -> "PauliString":
        """Map qubit k of self onto positions[k] of a larger register."""
        if len(positions) != self.num_qubits:
            raise PauliError("positions must match num_qubits")
        x = z = 0
        for k, pos in enumerate(positions):
            x |= ((self.x >> k) & 1) << pos
            z |= ((self.z >> k) & 1) << pos
        return PauliString(num_qubits, x, z, self.phase)

    def adjoint(self) -> "PauliString":
        # (i^p W)^dag = i^{-p} W
        return PauliString(self.num_qubits, self.x, self.z, (-self.phase) % 4)


def multiply(a: PauliString, b: PauliString) -> PauliString:
    """Product ab with exact phase tracking."""
    if a.num_qubits != b.num_qubits:
        raise PauliError("size mismatch")
    x = a.x ^ b.x
    z = a.z ^ b.z
    # Work in the X^x Z^z convention internally:
    #   i^p W  =  i^{p + popcount(x & z)} X^x Z^z
    # and commute Z^z_a past X^x_b, which costs (-1)^{z_a . x_b}.
    phase = (
        a.phase
        + b.phase
        + (a.x & a.z).bit_count()
        + (b.x & b.z).bit_count()
        + 2 * (a.z & b.x).bit_count()
        - (x & z).bit_count()
    ) % 4
    return PauliString(a.num_qubits, x, z, phase)


def commutes(a: PauliString, b: PauliString) -> bool:
    """True iff ab = ba (symplectic inner product vanishes mod 2)."""
    if a.num_qubits != b.num_qubits:
        raise PauliError("size mismatch")
    return ((a.x & b.z).bit_count() + (a.z & b.x).bit_count()) % 2 == 0


@dataclass(frozen=True)
class CliffordOp:
    """One gate from the fixed set {I,H,S,S_DAG,X,Y,Z,CX,CZ,SWAP}."""

    kind: str
    targets: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _GATE_ARITY:
            raise PauliError(f"unknown gate {self.kind!r}")
        object.__setattr__(self, "targets", tuple(self.targets))
        if len(self.targets) != _GATE_ARITY[self.kind]:
            raise PauliError(f"{self.kind} expects {_GATE_ARITY[self.kind]} targets")
        if len(set(self.targets)) != len(self.targets):
            raise PauliError("targets must be distinct")

    @property
    def arity(self) -> int:
        return _GATE_ARITY[self.kind]

    def inverse(self) -> "CliffordOp":
        return CliffordOp(_GATE_INVERSE[self.kind], self.targets)


def _build_conjugation_tables():
    """Tabulate U W U^dag for every gate U and local Pauli pattern W.

    Computed once from dense matrices so the sign bookkeeping cannot drift
    from the actual unitaries.  Table entry: local bit pattern -> (new
    pattern, phase increment mod 4).
    """
    import numpy as np

    one = {
        "I": np.eye(2),
        "X": np.array([[0, 1], [1, 0]], dtype=complex),
        "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
        "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    }
    gates = {
        "I": one["I"],
        "H": np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
        "S": np.diag([1, 1j]),
        "S_DAG": np.diag([1, -1j]),
        "X": one["X"],
        "Y": one["Y"],
        "Z": one["Z"],
        "CX": np.array(
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
        ),
        "CZ": np.diag([1, 1, 1, -1]).astype(complex),
        "SWAP": np.array(
            [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
        ),
    }

    def local_pauli(bits, arity):
        mat = np.eye(1, dtype=complex)
        for q in range(arity):
            xb = (bits >> (2 * q)) & 1
            zb = (bits >> (2 * q + 1)) & 1
            mat = np.kron(one[_BITS_TO_CHAR[(xb, zb)]], mat)
        return mat

    tables = {}
    for name, u in gates.items():
        arity = _GATE_ARITY[name]
        table = []
        for bits in range(4**arity):
            m = u @ local_pauli(bits, arity) @ u.conj().T
            found = None
            for bits2 in range(4**arity):
                cand = local_pauli(bits2, arity)
                for k in range(4):
                    if np.allclose(m, (1j**k) * cand):
                        found = (bits2, k)
                        break
                if found:
                    break
            assert found is not None, (name, bits)
            table.append(found)
        tables[name] = tuple(table)
    return tables


_CONJ_TABLES = _build_conjugation_tables()


def _local_bits(p: PauliString, targets: tuple[int, ...]) -> int:
    bits = 0
    for k, q in enumerate(targets):
        bits |= ((p.x >> q) & 1) << (2 * k)
        bits |= ((p.z >> q) & 1) << (2 * k + 1)
    return bits


def _with_local_bits(p: PauliString, targets: tuple[int, ...], bits: int, dphase: int) -> PauliString:
    x, z = p.x, p.z
    for k, q in enumerate(targets):
        x = (x & ~(1 << q)) | (((bits >> (2 * k)) & 1) << q)
        z = (z & ~(1 << q)) | (((bits >> (2 * k + 1)) & 1) << q)
    return PauliString(p.num_qubits, x, z, (p.phase + dphase) % 4)


def conjugate_forward(op: CliffordOp, p: PauliString) -> PauliString:
    """U P U^dag for a single gate (errors pushed forward through the gate)."""
    for q in op.targets:
        if q >= p.num_qubits:
            raise PauliError(f"target {q} out of range")
    bits = _local_bits(p, op.targets)
    new_bits, dphase = _CONJ_TABLES[op.kind][bits]
    return _with_local_bits(p, op.targets, new_bits, dphase)


def conjugate(op, p: PauliString) -> PauliString:
    """U^dag P U for a gate or a sequence of gates (Heisenberg picture).

    For a sequence ``[g1, g2, ..., gk]`` (circuit order) this returns
    ``gk^dag ... g1^dag P g1 ... gk``.
    """
    if isinstance(op, CliffordOp):
        return conjugate_forward(op.inverse(), p)
    for gate in op:
        p = conjugate_forward(gate.inverse(), p)
    return p


def push_through(p: PauliString, ops) -> PauliString:
    """Propagate an error Pauli forward through a gate sequence.

    Returns ``U P U^dag`` with ``U = gk ... g2 g1`` for ops in circuit order,
    which is how a fault occurring before the sequence appears at its end.
    """
    for gate in ops:
        p = conjugate_forward(gate, p)
    return p


@dataclass
class StabilizerTableau:
    """Stabilizer + destabilizer rows for an n-qubit stabilizer state."""

    num_qubits: int
    stabilizers: list = field(default_factory=list)
    destabilizers: list = field(default_factory=list)

    @classmethod
    def zero_state(cls, num_qubits: int) -> "StabilizerTableau":
        stabs = [PauliString.single(num_qubits, q, "Z") for q in range(num_qubits)]
        destabs = [PauliString.single(num_qubits, q, "X") for q in range(num_qubits)]
        return cls(num_qubits, stabs, destabs)

    def apply(self, op: CliffordOp) -> "StabilizerTableau":
        """Apply a Clifford gate in place (rows conjugate as U R U^dag)."""
        self.stabilizers = [conjugate_forward(op, r) for r in self.stabilizers]
        self.destabilizers = [conjugate_forward(op, r) for r in self.destabilizers]
        return self

    def apply_all(self, ops) -> "StabilizerTableau":
        for op in ops:
            self.apply(op)
        return self

    def copy(self) -> "StabilizerTableau":
        return StabilizerTableau(self.num_qubits, list(self.stabilizers), list(self.destabilizers))


def expectation(state: StabilizerTableau, p: PauliString) -> int:
    """<psi|P|psi> for a stabilizer state: +1, -1 or 0.

    Nonzero iff +/-P lies in the stabilizer group; the sign is recovered by
    expressing P as a product of stabilizer rows via destabilizer pairing.
    """
    if p.num_qubits != state.num_qubits:
        raise PauliError("size mismatch")
    if not p.is_hermitian:
        raise PauliError("expectation of a non-Hermitian Pauli")
    if p.is_identity:
        return p.sign
    for s in state.stabilizers:
        if not commutes(p, s):
            return 0
    prod = PauliString.identity(state.num_qubits)
    for d, s in zip(state.destabilizers, state.stabilizers):
        if not commutes(p, d):
            prod = multiply(prod, s)
    if prod.x != p.x or prod.z != p.z:
        raise PauliError("tableau rows are inconsistent")
    rel = (prod.phase - p.phase) % 4
    if rel == 0:
        return 1
    if rel == 2:
        return -1
    raise PauliError("tableau phase is inconsistent")


def expectation_general(state: StabilizerTableau, p: PauliString) -> complex:
    """Expectation of an arbitrarily phased Pauli (i^k times a Hermitian one)."""
    if p.is_hermitian:
        return complex(expectation(state, p))
    return 1j * expectation(state, PauliString(p.num_qubits, p.x, p.z, (p.phase - 1) % 4))
