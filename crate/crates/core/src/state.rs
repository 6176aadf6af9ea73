//! Dense state-vector representation of n-qutrit systems.
//!
//! Index convention: qutrit 0 is the leftmost ket digit (most significant
//! trit). The basis state |d0 d1 ... d(n-1)> lives at flat index
//! sum_k d_k * 3^(n-1-k), so |12> maps to index 5 in a two-qutrit system.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gates::{Gate3, Gate9};
use crate::trit::Trit;

/// A complex amplitude.
pub type Amplitude = Complex64;

/// Probability below which a measurement branch is treated as impossible.
pub const DEAD_BRANCH_TOL: f64 = 1e-12;

const NORM_TOL: f64 = 1e-9;

/// Flat index of a basis state given its ket digits.
pub fn basis_index(digits: &[Trit]) -> usize {
    digits.iter().fold(0, |acc, d| acc * 3 + d.index())
}

/// Ket digits of a flat index in an n-qutrit system.
pub fn index_digits(index: usize, n: usize) -> Vec<Trit> {
    let mut digits = vec![Trit::ZERO; n];
    let mut rest = index;
    for slot in digits.iter_mut().rev() {
        *slot = Trit::new((rest % 3) as u8).unwrap();
        rest /= 3;
    }
    digits
}

/// A pure n-qutrit state: 3^n complex amplitudes with unit norm.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The basis state |d0 d1 ... d(n-1)>.
    pub fn basis(n: usize, digits: &[Trit]) -> Result<StateVector> {
        if digits.len() != n || n == 0 {
            return Err(Error::DigitCountMismatch { expected: n.max(1), got: digits.len() });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 3usize.pow(n as u32)];
        amps[basis_index(digits)] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n, amps })
    }

    /// Builds a state from raw amplitudes, which must be finite and
    /// normalized to within 1e-9.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<StateVector> {
        let n = num_qutrits_for_len(amps.len()).ok_or(Error::BadAmplitudeCount(amps.len()))?;
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFiniteAmplitude);
        }
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm_sqr));
        }
        Ok(StateVector { n, amps })
    }

    pub fn num_qutrits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Tensor product, `self` occupying the more significant digits.
    pub fn tensor(&self, other: &StateVector) -> StateVector {
        let mut amps = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        StateVector { n: self.n + other.n, amps }
    }

    fn check_index(&self, q: usize) -> Result<()> {
        if q < self.n {
            Ok(())
        } else {
            Err(Error::QutritOutOfRange { q, n: self.n })
        }
    }

    /// Stride between consecutive digits of qutrit `q` in the flat index.
    fn stride(&self, q: usize) -> usize {
        3usize.pow((self.n - 1 - q) as u32)
    }

    /// Applies a 3x3 gate to qutrit `q`.
    pub fn apply_single(&mut self, gate: &Gate3, q: usize) -> Result<()> {
        self.check_index(q)?;
        let stride = self.stride(q);
        let m = gate.matrix();
        for chunk in self.amps.chunks_mut(3 * stride) {
            for b in 0..stride {
                let a0 = chunk[b];
                let a1 = chunk[b + stride];
                let a2 = chunk[b + 2 * stride];
                chunk[b] = m[0][0] * a0 + m[0][1] * a1 + m[0][2] * a2;
                chunk[b + stride] = m[1][0] * a0 + m[1][1] * a1 + m[1][2] * a2;
                chunk[b + 2 * stride] = m[2][0] * a0 + m[2][1] * a1 + m[2][2] * a2;
            }
        }
        debug_assert!((self.norm_sqr() - 1.0).abs() < 1e-9);
        Ok(())
    }

    /// Applies a 3x3 gate to `target` on the components whose `control`
    /// digit is 2, extended linearly over superpositions.
    pub fn apply_controlled(&mut self, gate: &Gate3, control: usize, target: usize) -> Result<()> {
        self.check_index(control)?;
        self.check_index(target)?;
        if control == target {
            return Err(Error::ControlEqualsTarget { q: control });
        }
        let tstride = self.stride(target);
        let cstride = self.stride(control);
        let block = 3 * tstride;
        let m = gate.matrix();
        for (ci, chunk) in self.amps.chunks_mut(block).enumerate() {
            let base = ci * block;
            for b in 0..tstride {
                if (base + b) / cstride % 3 != 2 {
                    continue;
                }
                let a0 = chunk[b];
                let a1 = chunk[b + tstride];
                let a2 = chunk[b + 2 * tstride];
                chunk[b] = m[0][0] * a0 + m[0][1] * a1 + m[0][2] * a2;
                chunk[b + tstride] = m[1][0] * a0 + m[1][1] * a1 + m[1][2] * a2;
                chunk[b + 2 * tstride] = m[2][0] * a0 + m[2][1] * a1 + m[2][2] * a2;
            }
        }
        debug_assert!((self.norm_sqr() - 1.0).abs() < 1e-9);
        Ok(())
    }

    /// Applies a 9x9 gate to the ordered pair (q1, q2): the row/column
    /// index of the matrix is 3 * digit(q1) + digit(q2).
    pub fn apply_two_qutrit(&mut self, gate: &Gate9, q1: usize, q2: usize) -> Result<()> {
        self.check_index(q1)?;
        self.check_index(q2)?;
        if q1 == q2 {
            return Err(Error::ControlEqualsTarget { q: q1 });
        }
        let s1 = self.stride(q1);
        let s2 = self.stride(q2);
        let m = gate.matrix();
        for base in 0..self.dim() {
            if base / s1 % 3 != 0 || base / s2 % 3 != 0 {
                continue;
            }
            let mut old = [Complex64::new(0.0, 0.0); 9];
            for d1 in 0..3 {
                for d2 in 0..3 {
                    old[3 * d1 + d2] = self.amps[base + d1 * s1 + d2 * s2];
                }
            }
            for d1 in 0..3 {
                for d2 in 0..3 {
                    let row = 3 * d1 + d2;
                    let mut acc = Complex64::new(0.0, 0.0);
                    for (col, amp) in old.iter().enumerate() {
                        acc += m[row][col] * amp;
                    }
                    self.amps[base + d1 * s1 + d2 * s2] = acc;
                }
            }
        }
        debug_assert!((self.norm_sqr() - 1.0).abs() < 1e-9);
        Ok(())
    }

    /// Marginal distribution of qutrit `q` over digits 0, 1, 2.
    pub fn qutrit_probabilities(&self, q: usize) -> Result<[f64; 3]> {
        self.check_index(q)?;
        let stride = self.stride(q);
        let mut probs = [0.0; 3];
        for (idx, amp) in self.amps.iter().enumerate() {
            probs[idx / stride % 3] += amp.norm_sqr();
        }
        Ok(probs)
    }

    /// Measures qutrit `q` in the computational basis using a caller-supplied
    /// uniform draw in [0, 1), collapsing and renormalizing the state.
    ///
    /// The outcome is the first digit d (in order 0, 1, 2) whose cumulative
    /// probability exceeds the draw; branches below 1e-12 never fire.
    pub fn measure_and_collapse(&mut self, q: usize, draw: f64) -> Result<Trit> {
        if !(0.0..1.0).contains(&draw) {
            return Err(Error::BadDraw(draw));
        }
        let probs = self.qutrit_probabilities(q)?;
        let total: f64 = probs.iter().sum();
        if total < DEAD_BRANCH_TOL {
            return Err(Error::DeadState { q });
        }
        let mut outcome = None;
        let mut cumulative = 0.0;
        for d in 0..3 {
            if probs[d] < DEAD_BRANCH_TOL {
                continue;
            }
            cumulative += probs[d];
            outcome = Some(d);
            if draw < cumulative {
                break;
            }
        }
        let d = outcome.expect("at least one live branch");
        let stride = self.stride(q);
        let scale = 1.0 / probs[d].sqrt();
        for (idx, amp) in self.amps.iter_mut().enumerate() {
            if idx / stride % 3 == d {
                *amp *= scale;
            } else {
                *amp = Complex64::new(0.0, 0.0);
            }
        }
        Ok(Trit::new(d as u8).unwrap())
    }

    /// Squared overlap |<self|other>|^2.
    pub fn fidelity(&self, other: &StateVector) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::QutritCountMismatch(self.n, other.n));
        }
        let mut dot = Complex64::new(0.0, 0.0);
        for (a, b) in self.amps.iter().zip(other.amps.iter()) {
            dot += a.conj() * b;
        }
        Ok(dot.norm_sqr())
    }
}

fn num_qutrits_for_len(len: usize) -> Option<usize> {
    let mut dim = 3usize;
    let mut n = 1;
    while dim < len {
        dim *= 3;
        n += 1;
    }
    (dim == len).then_some(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{a_gate_unitary, AKind, Gate3Label};

    fn trits(text: &str) -> Vec<Trit> {
        Trit::parse_digits(text).unwrap()
    }

    fn amp(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn basis_state_layout() {
        let s = StateVector::basis(1, &trits("0")).unwrap();
        assert_eq!(s.amplitudes(), &[amp(1.0), amp(0.0), amp(0.0)]);
        let s = StateVector::basis(1, &trits("2")).unwrap();
        assert_eq!(s.amplitudes(), &[amp(0.0), amp(0.0), amp(1.0)]);
        let s = StateVector::basis(2, &trits("12")).unwrap();
        assert_eq!(s.amplitudes()[5], amp(1.0));
        assert!(StateVector::basis(2, &trits("1")).is_err());
    }

    #[test]
    fn single_gate_on_basis_states() {
        let mut s = StateVector::basis(1, &trits("1")).unwrap();
        s.apply_single(&Gate3::new(Gate3Label::ZPlus1), 0).unwrap();
        assert_eq!(s, StateVector::basis(1, &trits("2")).unwrap());

        let mut s = StateVector::basis(1, &trits("2")).unwrap();
        s.apply_single(&Gate3::new(Gate3Label::Z12), 0).unwrap();
        assert_eq!(s, StateVector::basis(1, &trits("1")).unwrap());

        let mut s = StateVector::basis(2, &trits("21")).unwrap();
        let before = s.clone();
        s.apply_single(&Gate3::new(Gate3Label::Z0), 0).unwrap();
        assert_eq!(s, before);
    }

    #[test]
    fn leftmost_qutrit_is_most_significant() {
        let mut s = StateVector::basis(2, &trits("00")).unwrap();
        s.apply_single(&Gate3::new(Gate3Label::ZPlus1), 0).unwrap();
        assert_eq!(s.amplitudes()[3], amp(1.0));
        assert_eq!(s.amplitudes()[1], amp(0.0));
    }

    #[test]
    fn controlled_gate_triggers_on_two() {
        let plus1 = Gate3::new(Gate3Label::ZPlus1);
        let mut s = StateVector::basis(2, &trits("20")).unwrap();
        s.apply_controlled(&plus1, 0, 1).unwrap();
        assert_eq!(s, StateVector::basis(2, &trits("21")).unwrap());

        let mut s = StateVector::basis(2, &trits("10")).unwrap();
        s.apply_controlled(&plus1, 0, 1).unwrap();
        assert_eq!(s, StateVector::basis(2, &trits("10")).unwrap());

        assert!(matches!(
            StateVector::basis(2, &trits("00")).unwrap().apply_controlled(&plus1, 1, 1),
            Err(Error::ControlEqualsTarget { q: 1 })
        ));
    }

    #[test]
    fn controlled_gate_linear_over_superposition() {
        // (|00> + |20>)/sqrt(2) under C[+2] on (control 0, target 1)
        // becomes (|00> + |22>)/sqrt(2).
        let r = 1.0 / 2f64.sqrt();
        let mut amps = vec![amp(0.0); 9];
        amps[0] = amp(r);
        amps[6] = amp(r);
        let mut s = StateVector::from_amplitudes(amps).unwrap();
        s.apply_controlled(&Gate3::new(Gate3Label::ZPlus2), 0, 1).unwrap();
        assert!((s.amplitudes()[0] - amp(r)).norm() < 1e-12);
        assert!((s.amplitudes()[8] - amp(r)).norm() < 1e-12);
        assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn controlled_gate_with_control_below_target() {
        let mut s = StateVector::basis(2, &trits("02")).unwrap();
        s.apply_controlled(&Gate3::new(Gate3Label::ZPlus1), 1, 0).unwrap();
        assert_eq!(s, StateVector::basis(2, &trits("12")).unwrap());
    }

    #[test]
    fn two_qutrit_gate_semantics() {
        let mut s = StateVector::basis(2, &trits("10")).unwrap();
        let before = s.clone();
        s.apply_two_qutrit(&Gate9::identity(), 0, 1).unwrap();
        assert_eq!(s, before);

        let mut s = StateVector::basis(2, &trits("10")).unwrap();
        s.apply_two_qutrit(&a_gate_unitary(AKind::A1), 0, 1).unwrap();
        assert_eq!(s, StateVector::basis(2, &trits("11")).unwrap());

        let mut s = StateVector::basis(2, &trits("10")).unwrap();
        s.apply_two_qutrit(&a_gate_unitary(AKind::A2), 0, 1).unwrap();
        assert_eq!(s, StateVector::basis(2, &trits("12")).unwrap());

        // Reversed wire order: q2 is the control.
        let mut s = StateVector::basis(2, &trits("02")).unwrap();
        s.apply_two_qutrit(&a_gate_unitary(AKind::A1), 1, 0).unwrap();
        assert_eq!(s, StateVector::basis(2, &trits("22")).unwrap());
    }

    #[test]
    fn probabilities_of_uniform_and_weighted_states() {
        let mut s = StateVector::basis(1, &trits("0")).unwrap();
        s.apply_single(&Gate3::new(Gate3Label::Ch1), 0).unwrap();
        let p = s.qutrit_probabilities(0).unwrap();
        for d in 0..3 {
            assert!((p[d] - 1.0 / 3.0).abs() < 1e-12);
        }

        let s = StateVector::from_amplitudes(vec![
            amp(0.5f64.sqrt()),
            amp(0.3f64.sqrt()),
            amp(0.2f64.sqrt()),
        ])
        .unwrap();
        let p = s.qutrit_probabilities(0).unwrap();
        assert!((p[0] - 0.5).abs() < 1e-12);
        assert!((p[1] - 0.3).abs() < 1e-12);
        assert!((p[2] - 0.2).abs() < 1e-12);

        let s = StateVector::basis(1, &trits("2")).unwrap();
        assert_eq!(s.qutrit_probabilities(0).unwrap(), [0.0, 0.0, 1.0]);
    }

    #[test]
    fn measurement_collapses_entangled_partner() {
        // (|00> + |11> + |22>)/sqrt(3), measure qutrit 1, outcome 0.
        let r = 1.0 / 3f64.sqrt();
        let mut amps = vec![amp(0.0); 9];
        amps[0] = amp(r);
        amps[4] = amp(r);
        amps[8] = amp(r);
        let mut s = StateVector::from_amplitudes(amps).unwrap();
        let outcome = s.measure_and_collapse(1, 0.1).unwrap();
        assert_eq!(outcome, Trit::ZERO);
        assert_eq!(s, StateVector::basis(2, &trits("00")).unwrap());
    }

    #[test]
    fn measurement_of_basis_state_is_deterministic() {
        for draw in [0.0, 0.5, 0.999_999] {
            let mut s = StateVector::basis(1, &trits("1")).unwrap();
            assert_eq!(s.measure_and_collapse(0, draw).unwrap(), Trit::ONE);
            assert_eq!(s, StateVector::basis(1, &trits("1")).unwrap());
        }
    }

    #[test]
    fn measurement_thresholds_follow_digit_order() {
        // (|0> + |1>)/sqrt(2): cumulative thresholds 0.5 and 1.0.
        let r = 1.0 / 2f64.sqrt();
        let make = || StateVector::from_amplitudes(vec![amp(r), amp(r), amp(0.0)]).unwrap();
        let mut s = make();
        assert_eq!(s.measure_and_collapse(0, 0.75).unwrap(), Trit::ONE);
        assert_eq!(s, StateVector::basis(1, &trits("1")).unwrap());
        let mut s = make();
        assert_eq!(s.measure_and_collapse(0, 0.25).unwrap(), Trit::ZERO);
        // Draws at the top of the range never land on a dead branch.
        let mut s = make();
        assert_eq!(s.measure_and_collapse(0, 0.999_999_999).unwrap(), Trit::ONE);
    }

    #[test]
    fn measurement_rejects_dead_state() {
        let tiny = StateVector { n: 1, amps: vec![amp(1e-8), amp(0.0), amp(0.0)] };
        let mut s = tiny;
        assert!(matches!(s.measure_and_collapse(0, 0.5), Err(Error::DeadState { q: 0 })));
    }

    #[test]
    fn fidelity_cases() {
        let zero = StateVector::basis(1, &trits("0")).unwrap();
        let one = StateVector::basis(1, &trits("1")).unwrap();
        let mut plus = zero.clone();
        plus.apply_single(&Gate3::new(Gate3Label::Ch1), 0).unwrap();

        assert!((plus.fidelity(&plus).unwrap() - 1.0).abs() < 1e-12);
        assert!(zero.fidelity(&one).unwrap() < 1e-12);
        assert!((plus.fidelity(&zero).unwrap() - 1.0 / 3.0).abs() < 1e-12);
        assert!(zero.fidelity(&StateVector::basis(2, &trits("00")).unwrap()).is_err());
    }

    #[test]
    fn tensor_product_layout() {
        let a = StateVector::basis(1, &trits("2")).unwrap();
        let b = StateVector::basis(1, &trits("1")).unwrap();
        assert_eq!(a.tensor(&b), StateVector::basis(2, &trits("21")).unwrap());
    }

    #[test]
    fn from_amplitudes_validation() {
        assert!(StateVector::from_amplitudes(vec![amp(1.0); 4]).is_err());
        assert!(StateVector::from_amplitudes(vec![amp(1.0), amp(1.0), amp(0.0)]).is_err());
        assert!(StateVector::from_amplitudes(vec![
            Complex64::new(f64::NAN, 0.0),
            amp(0.0),
            amp(0.0)
        ])
        .is_err());
    }
}
