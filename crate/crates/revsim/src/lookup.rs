//! Table lookups via unary iteration, and the lookup-addition that
//! dominates the windowed exponentiation.
//!
//! A lookup over a w-bit address walks the address-space binary tree
//! depth-first with one node-control ancilla per level. Each internal node
//! below the root costs one AND computation (a counted Toffoli); switching
//! to a sibling is a CNOT and uncomputing a node control is measurement
//! based, so a full lookup counts 2^w - 2 Toffolis. Uncomputing the whole
//! lookup output register reverses the network, turning every counted AND
//! into a free uncomputation; its real cost (2 sqrt(2^w), with the square
//! root lookup of phase fixups) is carried by the abstract cost model, not
//! the gate tally.

use std::ops::Range;

use crate::circuit::{Circuit, Gate, Qubit};
use crate::{Error, Result};

/// Where the pieces of a lookup-addition circuit live.
#[derive(Debug, Clone)]
pub struct LookupAddition {
    pub circuit: Circuit,
    pub address: Range<u32>,
    pub target: Range<u32>,
    pub output: Range<u32>,
}

struct LookupEmitter<'a> {
    circuit: &'a mut Circuit,
    /// Address qubits, most significant first.
    address_msb_first: Vec<Qubit>,
    level_ancilla: Vec<Qubit>,
    output: Vec<Qubit>,
    table: &'a [u64],
}

impl LookupEmitter<'_> {
    fn write_leaf(&mut self, control: Qubit, address: usize) {
        let value = self.table.get(address).copied().unwrap_or(0);
        for (j, &out) in self.output.iter().enumerate() {
            if value >> j & 1 == 1 {
                self.circuit.push(Gate::cnot(control, out));
            }
        }
    }

    /// Emit the subtree for addresses [lo, hi) under `control`.
    fn walk(&mut self, control: Qubit, level: usize, lo: usize, hi: usize) {
        if hi - lo == 1 {
            self.write_leaf(control, lo);
            return;
        }
        let bit = self.address_msb_first[level];
        let anc = self.level_ancilla[level];
        let mid = (lo + hi) / 2;
        // anc <- control AND NOT bit
        self.circuit.push(Gate::not(bit));
        self.circuit.push(Gate::toffoli(control, bit, anc));
        self.circuit.push(Gate::not(bit));
        self.walk(anc, level + 1, lo, mid);
        // Sibling switch: anc <- control AND bit.
        self.circuit.push(Gate::cnot(control, anc));
        self.walk(anc, level + 1, mid, hi);
        self.circuit.push(Gate::uncompute_and(control, bit, anc));
    }

    /// Emit the whole (uncontrolled) lookup. The root split needs no AND:
    /// the top node control is just (negated) copy of the top address bit.
    fn emit(&mut self) {
        let n = self.address_msb_first.len();
        if n == 0 {
            // Single-entry table: unconditional writes.
            let value = self.table.first().copied().unwrap_or(0);
            for (j, &out) in self.output.iter().enumerate() {
                if value >> j & 1 == 1 {
                    self.circuit.push(Gate::not(out));
                }
            }
            return;
        }
        let bit = self.address_msb_first[0];
        let anc = self.level_ancilla[0];
        let half = 1usize << (n - 1);
        // anc <- NOT bit, flipped to bit for the right half; both Clifford.
        self.circuit.push(Gate::cnot(bit, anc));
        self.circuit.push(Gate::not(anc));
        if n == 1 {
            self.write_leaf(anc, 0);
            self.circuit.push(Gate::not(anc));
            self.write_leaf(anc, 1);
        } else {
            self.walk(anc, 1, 0, half);
            self.circuit.push(Gate::not(anc));
            self.walk(anc, 1, half, 2 * half);
        }
        self.circuit.push(Gate::cnot(bit, anc));
    }
}

/// Emit `output ^= table[address]` into `circuit`.
///
/// `address` is low bit first. `level_ancilla` needs one clean qubit per
/// address bit; all are returned to |0>.
pub fn emit_lookup(
    circuit: &mut Circuit,
    address: &[Qubit],
    output: &[Qubit],
    level_ancilla: &[Qubit],
    table: &[u64],
) -> Result<()> {
    if table.len() > 1usize << address.len() {
        return Err(Error::TableTooLong { len: table.len(), width: address.len() as u32 });
    }
    let bound = if output.len() >= 64 { u64::MAX } else { 1u64 << output.len() };
    for (a, &value) in table.iter().enumerate() {
        if value >= bound {
            return Err(Error::TableEntryOutOfRange { address: a, value, bound });
        }
    }
    assert!(level_ancilla.len() >= address.len());
    let mut emitter = LookupEmitter {
        circuit,
        address_msb_first: address.iter().rev().copied().collect(),
        level_ancilla: level_ancilla.to_vec(),
        output: output.to_vec(),
        table,
    };
    emitter.emit();
    Ok(())
}

/// Emit the measurement-based uncomputation of a previous identical lookup.
pub fn emit_unlookup(
    circuit: &mut Circuit,
    address: &[Qubit],
    output: &[Qubit],
    level_ancilla: &[Qubit],
    table: &[u64],
) -> Result<()> {
    let mut forward = Circuit::new(circuit.width())?;
    emit_lookup(&mut forward, address, output, level_ancilla, table)?;
    circuit.extend(forward.inverse().gates);
    Ok(())
}

/// Build a full lookup addition: for every address a, add table[a] into the
/// target register (mod 2^target_width), uncomputing the looked-up value
/// afterwards.
pub fn build_lookup_addition(
    table: &[u64],
    address_width: u32,
    target_width: u32,
) -> Result<LookupAddition> {
    let w = address_width;
    let m = target_width;
    // Layout: address, target, lookup output, level ancillae, carry ancilla.
    let width = w + 2 * m + w + 1;
    let mut circuit = Circuit::new(width)?;
    let address: Vec<Qubit> = (0..w).collect();
    let target: Vec<Qubit> = (w..w + m).collect();
    let output: Vec<Qubit> = (w + m..w + 2 * m).collect();
    let levels: Vec<Qubit> = (w + 2 * m..2 * w + 2 * m).collect();
    let carry_anc = 2 * w + 2 * m;
    circuit.name_register("address", 0..w);
    circuit.name_register("target", w..w + m);
    circuit.name_register("output", w + m..w + 2 * m);
    circuit.name_register("scratch", w + 2 * m..width);

    emit_lookup(&mut circuit, &address, &output, &levels, table)?;
    crate::adder::emit_add(&mut circuit, &output, &target, carry_anc, None, None);
    emit_unlookup(&mut circuit, &address, &output, &levels, table)?;

    Ok(LookupAddition {
        circuit,
        address: 0..w,
        target: w..w + m,
        output: w + m..w + 2 * m,
    })
}

impl LookupAddition {
    /// Simulate with a classical address and target, returning the new
    /// target value.
    pub fn run(&self, address: u64, target: u64) -> Result<u64> {
        let mut state = crate::circuit::BasisState::zero(self.circuit.width());
        state.write(self.address.clone(), address as u128);
        state.write(self.target.clone(), target as u128);
        let out = self.circuit.simulate(&state)?;
        // The lookup output register and all ancillae must come back clean.
        if out.read(self.output.clone()) != 0 {
            return Err(Error::MalformedMeasurement("lookup output not uncomputed".into()));
        }
        Ok(out.read(self.target.clone()) as u64)
    }
}
