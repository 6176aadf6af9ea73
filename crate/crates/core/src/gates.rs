//! The ternary gate library: six single-qutrit Z permutation gates, the two
//! Chrestenson gates, and the composite two-qutrit A1/A2 adders in both
//! decomposed (four primitive gates) and semantic (9x9 permutation) form.
//!
//! Controlled gates follow the Muthukrishnan-Stroud convention: the Z
//! transform fires on the target only when the control qutrit is |2>.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::trit::Trit;

/// Cube root of unity, exp(2*pi*i/3).
pub fn omega() -> Complex64 {
    Complex64::new(-0.5, 3f64.sqrt() / 2.0)
}

/// omega^k for k taken modulo 3.
pub fn omega_pow(k: u64) -> Complex64 {
    match k % 3 {
        0 => Complex64::new(1.0, 0.0),
        1 => omega(),
        _ => omega().conj(),
    }
}

/// Labels for the eight single-qutrit gates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate3Label {
    /// Identity.
    Z0,
    /// Adds 1 mod 3.
    ZPlus1,
    /// Adds 2 mod 3.
    ZPlus2,
    /// Swaps levels 0 and 1.
    Z01,
    /// Swaps levels 0 and 2.
    Z02,
    /// Swaps levels 1 and 2.
    Z12,
    /// Ternary Fourier gate; maps |0> to the uniform superposition.
    Ch1,
    /// Inverse of Ch1.
    Ch2,
}

impl Gate3Label {
    pub const ALL: [Gate3Label; 8] = [
        Gate3Label::Z0,
        Gate3Label::ZPlus1,
        Gate3Label::ZPlus2,
        Gate3Label::Z01,
        Gate3Label::Z02,
        Gate3Label::Z12,
        Gate3Label::Ch1,
        Gate3Label::Ch2,
    ];

    pub const Z_GATES: [Gate3Label; 6] = [
        Gate3Label::Z0,
        Gate3Label::ZPlus1,
        Gate3Label::ZPlus2,
        Gate3Label::Z01,
        Gate3Label::Z02,
        Gate3Label::Z12,
    ];

    /// True for the six permutation gates usable under an M-S control.
    pub fn is_z(self) -> bool {
        !matches!(self, Gate3Label::Ch1 | Gate3Label::Ch2)
    }

    /// Canonical lower-case spelling used by the circuit text format.
    pub fn as_str(self) -> &'static str {
        match self {
            Gate3Label::Z0 => "z0",
            Gate3Label::ZPlus1 => "z+1",
            Gate3Label::ZPlus2 => "z+2",
            Gate3Label::Z01 => "z01",
            Gate3Label::Z02 => "z02",
            Gate3Label::Z12 => "z12",
            Gate3Label::Ch1 => "ch1",
            Gate3Label::Ch2 => "ch2",
        }
    }

    pub fn from_str(text: &str) -> Option<Gate3Label> {
        Gate3Label::ALL
            .iter()
            .copied()
            .find(|l| l.as_str() == text.to_ascii_lowercase())
    }
}

impl fmt::Display for Gate3Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A single-qutrit gate: a labeled unitary 3x3 matrix with unit quantum cost.
#[derive(Clone, Debug, PartialEq)]
pub struct Gate3 {
    label: Gate3Label,
    matrix: [[Complex64; 3]; 3],
}

impl Gate3 {
    pub fn new(label: Gate3Label) -> Gate3 {
        let matrix = match label {
            Gate3Label::Ch1 => chrestenson_matrix(1),
            Gate3Label::Ch2 => chrestenson_matrix(2),
            z => permutation_matrix(z_permutation(z)),
        };
        Gate3 { label, matrix }
    }

    pub fn label(&self) -> Gate3Label {
        self.label
    }

    pub fn matrix(&self) -> &[[Complex64; 3]; 3] {
        &self.matrix
    }

    /// Every single-qutrit gate (M-S or Chrestenson) costs one unit.
    pub fn cost(&self) -> u32 {
        1
    }

    /// Maximum absolute deviation of M * M^dagger from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let m = &self.matrix;
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let mut dot = Complex64::new(0.0, 0.0);
                for k in 0..3 {
                    dot += m[i][k] * m[j][k].conj();
                }
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).norm());
            }
        }
        worst
    }
}

/// The six Z gates as digit permutations.
fn z_permutation(label: Gate3Label) -> [u8; 3] {
    match label {
        Gate3Label::Z0 => [0, 1, 2],
        Gate3Label::ZPlus1 => [1, 2, 0],
        Gate3Label::ZPlus2 => [2, 0, 1],
        Gate3Label::Z01 => [1, 0, 2],
        Gate3Label::Z02 => [2, 1, 0],
        Gate3Label::Z12 => [0, 2, 1],
        _ => unreachable!("not a Z gate"),
    }
}

fn permutation_matrix(perm: [u8; 3]) -> [[Complex64; 3]; 3] {
    let mut m = [[Complex64::new(0.0, 0.0); 3]; 3];
    for (col, &row) in perm.iter().enumerate() {
        m[row as usize][col] = Complex64::new(1.0, 0.0);
    }
    m
}

/// Ch1[r][c] = omega^(rc) / sqrt(3); Ch2 is the elementwise conjugate.
/// The 1/sqrt(3) factor makes the pair mutually inverse unitaries.
fn chrestenson_matrix(k: u64) -> [[Complex64; 3]; 3] {
    let scale = 1.0 / 3f64.sqrt();
    let mut m = [[Complex64::new(0.0, 0.0); 3]; 3];
    for (r, row) in m.iter_mut().enumerate() {
        for (c, entry) in row.iter_mut().enumerate() {
            *entry = omega_pow(k * (r as u64) * (c as u64)) * scale;
        }
    }
    m
}

/// Constructs one of the six Z gates.
pub fn z_gate(label: Gate3Label) -> Result<Gate3> {
    if label.is_z() {
        Ok(Gate3::new(label))
    } else {
        Err(Error::NotAZGate(label.to_string()))
    }
}

/// Constructs Ch1 (k = 1) or Ch2 (k = 2).
pub fn chrestenson(k: u8) -> Result<Gate3> {
    match k {
        1 => Ok(Gate3::new(Gate3Label::Ch1)),
        2 => Ok(Gate3::new(Gate3Label::Ch2)),
        other => Err(Error::BadTrit(other)),
    }
}

/// The two composite two-qutrit adder gates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AKind {
    /// target += control (mod 3)
    A1,
    /// target += 2 * control (mod 3)
    A2,
}

impl AKind {
    /// The multiplier applied to the control digit.
    pub fn multiplier(self) -> u8 {
        match self {
            AKind::A1 => 1,
            AKind::A2 => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AKind::A1 => "a1",
            AKind::A2 => "a2",
        }
    }
}

impl fmt::Display for AKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A labeled two-qutrit unitary over the ordered pair (control, target),
/// indexed as 3 * control_digit + target_digit.
#[derive(Clone, Debug, PartialEq)]
pub struct Gate9 {
    label: String,
    matrix: [[Complex64; 9]; 9],
    cost: u32,
    depth: u32,
}

impl Gate9 {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn matrix(&self) -> &[[Complex64; 9]; 9] {
        &self.matrix
    }

    pub fn cost(&self) -> u32 {
        self.cost
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn identity() -> Gate9 {
        let mut matrix = [[Complex64::new(0.0, 0.0); 9]; 9];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = Complex64::new(1.0, 0.0);
        }
        Gate9 { label: "id".to_string(), matrix, cost: 0, depth: 0 }
    }

    /// Maximum absolute deviation of M * M^dagger from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let m = &self.matrix;
        let mut worst: f64 = 0.0;
        for i in 0..9 {
            for j in 0..9 {
                let mut dot = Complex64::new(0.0, 0.0);
                for k in 0..9 {
                    dot += m[i][k] * m[j][k].conj();
                }
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).norm());
            }
        }
        worst
    }
}

/// The semantic form of A1/A2: the 9x9 permutation taking |c,t> to
/// |c, (t + m*c) mod 3> with m = 1 for A1 and m = 2 for A2.
pub fn a_gate_unitary(kind: AKind) -> Gate9 {
    let m = kind.multiplier() as usize;
    let mut matrix = [[Complex64::new(0.0, 0.0); 9]; 9];
    for c in 0..3 {
        for t in 0..3 {
            let col = 3 * c + t;
            let row = 3 * c + (t + m * c) % 3;
            matrix[row][col] = Complex64::new(1.0, 0.0);
        }
    }
    Gate9 { label: kind.as_str().to_string(), matrix, cost: 4, depth: 4 }
}

/// A primitive gate placement: the unit-cost vocabulary everything else
/// (cost, depth, the dense oracle) is measured against.
#[derive(Clone, Debug, PartialEq)]
pub enum Primitive {
    Single { gate: Gate3, q: usize },
    Controlled { gate: Gate3, control: usize, target: usize },
}

impl Primitive {
    /// Qutrits the primitive occupies, for depth layering.
    pub fn touched(&self) -> Vec<usize> {
        match self {
            Primitive::Single { q, .. } => vec![*q],
            Primitive::Controlled { control, target, .. } => vec![*control, *target],
        }
    }
}

/// The decomposed form of A1/A2: two controlled Z gates interleaved with
/// two Z gates on the control wire. The control is temporarily rotated
/// through |2> so that the M-S trigger fires for each control value.
pub fn a_gate_sequence(kind: AKind, control: usize, target: usize) -> Result<[Primitive; 4]> {
    if control == target {
        return Err(Error::ControlEqualsTarget { q: control });
    }
    let (first, second) = match kind {
        AKind::A1 => (Gate3Label::ZPlus2, Gate3Label::ZPlus1),
        AKind::A2 => (Gate3Label::ZPlus1, Gate3Label::ZPlus2),
    };
    Ok([
        Primitive::Controlled { gate: Gate3::new(first), control, target },
        Primitive::Single { gate: Gate3::new(Gate3Label::ZPlus1), q: control },
        Primitive::Controlled { gate: Gate3::new(second), control, target },
        Primitive::Single { gate: Gate3::new(Gate3Label::ZPlus2), q: control },
    ])
}

/// Where a Z gate sends a basis digit.
pub fn z_action(label: Gate3Label, input: Trit) -> Trit {
    Trit::new(z_permutation(label)[input.index()]).unwrap()
}
