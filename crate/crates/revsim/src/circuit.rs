//! Gate-level reversible circuits and their basis-state simulation.
//!
//! A circuit is an ordered list of NOT/CNOT/Toffoli gates over at most 128
//! qubits, each optionally conditioned on a classical input bit. Every gate
//! is a self-inverse permutation of basis states, so the whole circuit
//! denotes a bijection and reversing the gate order inverts it.
//!
//! Toffolis come in two flavors with identical permutation action but
//! different cost: [`GateKind::Toffoli`] counts one Toffoli and one unit of
//! dependent measurement depth (AutoCCZ-style teleportation), while
//! [`GateKind::UncomputeAnd`] marks the measurement-based uncomputation of
//! an AND ancilla, which consumes no magic states and contributes no
//! dependent depth.

use std::fmt::Write as _;
use std::ops::Range;

use crate::{Error, Result};

pub type Qubit = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateKind {
    Not { target: Qubit },
    Cnot { control: Qubit, target: Qubit },
    Toffoli { c1: Qubit, c2: Qubit, target: Qubit },
    /// Toffoli-acting measurement-based uncomputation of an AND ancilla.
    UncomputeAnd { c1: Qubit, c2: Qubit, target: Qubit },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gate {
    pub kind: GateKind,
    /// Classical input bit gating the whole gate, if any.
    pub condition: Option<u32>,
}

impl Gate {
    pub fn not(target: Qubit) -> Gate {
        Gate { kind: GateKind::Not { target }, condition: None }
    }

    pub fn cnot(control: Qubit, target: Qubit) -> Gate {
        Gate { kind: GateKind::Cnot { control, target }, condition: None }
    }

    pub fn toffoli(c1: Qubit, c2: Qubit, target: Qubit) -> Gate {
        Gate { kind: GateKind::Toffoli { c1, c2, target }, condition: None }
    }

    pub fn uncompute_and(c1: Qubit, c2: Qubit, target: Qubit) -> Gate {
        Gate { kind: GateKind::UncomputeAnd { c1, c2, target }, condition: None }
    }

    pub fn when(mut self, classical_bit: u32) -> Gate {
        self.condition = Some(classical_bit);
        self
    }

    pub fn qubits(&self) -> impl Iterator<Item = Qubit> {
        let (a, b, c) = match self.kind {
            GateKind::Not { target } => (target, None, None),
            GateKind::Cnot { control, target } => (control, Some(target), None),
            GateKind::Toffoli { c1, c2, target } | GateKind::UncomputeAnd { c1, c2, target } => {
                (c1, Some(c2), Some(target))
            }
        };
        std::iter::once(a).chain(b).chain(c)
    }

}

/// A basis state: one classical bit per qubit, plus the classical input
/// record consulted by conditioned gates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisState {
    bits: u128,
    width: u32,
    pub classical: Vec<bool>,
}

impl BasisState {
    pub fn zero(width: u32) -> BasisState {
        assert!(width <= 128);
        BasisState { bits: 0, width, classical: Vec::new() }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn bit(&self, q: Qubit) -> bool {
        debug_assert!(q < self.width);
        self.bits >> q & 1 == 1
    }

    pub fn flip(&mut self, q: Qubit) {
        debug_assert!(q < self.width);
        self.bits ^= 1 << q;
    }

    /// Read a register as an integer, low bit first.
    pub fn read(&self, range: Range<u32>) -> u128 {
        debug_assert!(range.end <= self.width);
        let len = range.end - range.start;
        let mask = if len == 128 { u128::MAX } else { (1u128 << len) - 1 };
        self.bits >> range.start & mask
    }

    /// Write a register, low bit first.
    pub fn write(&mut self, range: Range<u32>, value: u128) {
        debug_assert!(range.end <= self.width);
        let len = range.end - range.start;
        let mask = if len == 128 { u128::MAX } else { (1u128 << len) - 1 };
        debug_assert!(value <= mask, "value does not fit the register");
        self.bits = (self.bits & !(mask << range.start)) | (value << range.start);
    }

    pub fn as_u128(&self) -> u128 {
        self.bits
    }
}

/// Gate counts under the documented convention: each Toffoli costs one unit
/// of dependent measurement depth, measurement-based uncomputations are
/// free, Cliffords are free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Resources {
    pub toffolis: u64,
    pub measurement_depth: u64,
}

#[derive(Debug, Clone, Default)]
pub struct Circuit {
    width: u32,
    pub gates: Vec<Gate>,
    /// Named registers mapped to qubit index ranges.
    pub registers: Vec<(String, Range<u32>)>,
}

impl Circuit {
    pub fn new(width: u32) -> Result<Circuit> {
        if width > 128 {
            return Err(Error::TooWide(width));
        }
        Ok(Circuit { width, gates: Vec::new(), registers: Vec::new() })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn name_register(&mut self, name: &str, range: Range<u32>) {
        assert!(range.end <= self.width);
        self.registers.push((name.to_string(), range));
    }

    pub fn register(&self, name: &str) -> Option<Range<u32>> {
        self.registers.iter().find(|(n, _)| n == name).map(|(_, r)| r.clone())
    }

    pub fn push(&mut self, gate: Gate) {
        for q in gate.qubits() {
            assert!(q < self.width, "qubit {q} out of range for width {}", self.width);
        }
        self.gates.push(gate);
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) {
        for g in gates {
            self.push(g);
        }
    }

    /// The inverse circuit: gates reversed, counted ANDs exchanged with
    /// free uncomputations.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            width: self.width,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
            registers: self.registers.clone(),
        }
    }

    /// Apply the circuit to a basis state.
    pub fn simulate(&self, input: &BasisState) -> Result<BasisState> {
        if input.width() != self.width {
            return Err(Error::WidthMismatch { state: input.width(), circuit: self.width });
        }
        let mut state = input.clone();
        for gate in &self.gates {
            for q in gate.qubits() {
                if q >= self.width {
                    return Err(Error::QubitOutOfRange { qubit: q, width: self.width });
                }
            }
            if let Some(bit) = gate.condition {
                match state.classical.get(bit as usize) {
                    Some(false) => continue,
                    Some(true) => {}
                    None => {
                        return Err(Error::ClassicalBitOutOfRange {
                            bit,
                            len: state.classical.len(),
                        })
                    }
                }
            }
            match gate.kind {
                GateKind::Not { target } => state.flip(target),
                GateKind::Cnot { control, target } => {
                    if state.bit(control) {
                        state.flip(target);
                    }
                }
                GateKind::Toffoli { c1, c2, target }
                | GateKind::UncomputeAnd { c1, c2, target } => {
                    if state.bit(c1) && state.bit(c2) {
                        state.flip(target);
                    }
                }
            }
        }
        Ok(state)
    }

    /// Toffoli tally and the longest chain of dependent measurements.
    ///
    /// Depth is the longest path through the gate list where gates touching
    /// a common qubit are ordered and each counted Toffoli adds one unit.
    pub fn count_resources(&self) -> Resources {
        let mut toffolis = 0u64;
        let mut frontier = vec![0u64; self.width as usize];
        let mut depth = 0u64;
        for gate in &self.gates {
            let cost = match gate.kind {
                GateKind::Toffoli { .. } => 1,
                _ => 0,
            };
            toffolis += cost;
            let at = gate.qubits().map(|q| frontier[q as usize]).max().unwrap() + cost;
            for q in gate.qubits() {
                frontier[q as usize] = at;
            }
            depth = depth.max(at);
        }
        Resources { toffolis, measurement_depth: depth }
    }

    /// Line-based text form: a `REG name start end` line per register, then
    /// one gate per line (`kind qubits.. [?classical_bit]`).
    pub fn export(&self) -> String {
        let mut out = String::new();
        for (name, range) in &self.registers {
            writeln!(out, "REG {name} {} {}", range.start, range.end).unwrap();
        }
        for gate in &self.gates {
            match gate.kind {
                GateKind::Not { target } => write!(out, "NOT {target}").unwrap(),
                GateKind::Cnot { control, target } => {
                    write!(out, "CNOT {control} {target}").unwrap()
                }
                GateKind::Toffoli { c1, c2, target } => {
                    write!(out, "TOFFOLI {c1} {c2} {target}").unwrap()
                }
                GateKind::UncomputeAnd { c1, c2, target } => {
                    write!(out, "UNTOFFOLI {c1} {c2} {target}").unwrap()
                }
            }
            if let Some(bit) = gate.condition {
                write!(out, " ?{bit}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Parse the [`export`](Circuit::export) format.
    pub fn parse(text: &str) -> Result<Circuit> {
        let mut gates = Vec::new();
        let mut registers = Vec::new();
        let mut width = 0u32;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |reason: &str| Error::Parse { line: i + 1, reason: reason.to_string() };
            let mut parts = line.split_whitespace();
            let kind = parts.next().unwrap();
            let mut fields: Vec<&str> = parts.collect();
            let condition = match fields.last() {
                Some(last) if last.starts_with('?') => {
                    let bit = last[1..].parse().map_err(|_| err("bad classical bit"))?;
                    fields.pop();
                    Some(bit)
                }
                _ => None,
            };
            if kind == "REG" {
                if fields.len() != 3 || condition.is_some() {
                    return Err(err("REG takes a name and two indices"));
                }
                let start: u32 = fields[1].parse().map_err(|_| err("bad register start"))?;
                let end: u32 = fields[2].parse().map_err(|_| err("bad register end"))?;
                width = width.max(end);
                registers.push((fields[0].to_string(), start..end));
                continue;
            }
            let q: Vec<u32> = fields
                .iter()
                .map(|f| f.parse().map_err(|_| err("bad qubit index")))
                .collect::<Result<_>>()?;
            let gate_kind = match (kind, q.len()) {
                ("NOT", 1) => GateKind::Not { target: q[0] },
                ("CNOT", 2) => GateKind::Cnot { control: q[0], target: q[1] },
                ("TOFFOLI", 3) => GateKind::Toffoli { c1: q[0], c2: q[1], target: q[2] },
                ("UNTOFFOLI", 3) => GateKind::UncomputeAnd { c1: q[0], c2: q[1], target: q[2] },
                _ => return Err(err(&format!("unknown gate line {line:?}"))),
            };
            for &qubit in &q {
                width = width.max(qubit + 1);
            }
            gates.push(Gate { kind: gate_kind, condition });
        }
        let mut circuit = Circuit::new(width)?;
        circuit.registers = registers;
        circuit.extend(gates);
        Ok(circuit)
    }
}
