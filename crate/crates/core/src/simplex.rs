//! Dense primal simplex for `max cᵀx` subject to `Ax ≤ b`, `x ≥ 0`, `b ≥ 0`,
//! with Bland's rule. The origin is feasible, so no phase one is needed.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::surd::QuadraticSurd;

/// Ordered field the tableau works over.
pub trait LpScalar:
    Clone
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn sign(&self) -> Ordering;

    fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).sign()
    }
}

/// Pivot tolerance for binary64 tableaus.
pub const F64_EPS: f64 = 1e-12;

impl LpScalar for f64 {
    fn sign(&self) -> Ordering {
        if *self > F64_EPS {
            Ordering::Greater
        } else if *self < -F64_EPS {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl LpScalar for QuadraticSurd {
    fn sign(&self) -> Ordering {
        self.signum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome<T> {
    Optimal {
        value: T,
        x: Vec<T>,
        /// `b − Ax` per row
        slack: Vec<T>,
    },
    Unbounded,
}

pub fn maximize<T: LpScalar>(c: &[T], a: &[Vec<T>], b: &[T]) -> LpOutcome<T> {
    let m = a.len();
    let n = c.len();
    assert!(
        b.len() == m && a.iter().all(|row| row.len() == n),
        "shape mismatch"
    );
    assert!(
        b.iter().all(|v| !v.is_negative()),
        "right-hand side must be nonnegative"
    );

    // Columns 0..n are structural, n..n+m slack; last column is the rhs.
    let width = n + m + 1;
    let mut tab: Vec<Vec<T>> = (0..m)
        .map(|i| {
            let mut row = vec![T::zero(); width];
            row[..n].clone_from_slice(&a[i]);
            row[n + i] = T::one();
            row[width - 1] = b[i].clone();
            row
        })
        .collect();
    // Reduced costs; the objective value sits (negated) in the rhs slot.
    let mut cost = vec![T::zero(); width];
    cost[..n].clone_from_slice(c);
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Bland: entering column is the lowest index with positive reduced cost
    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_positive()) {
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !tab[i][enter].is_positive() {
                continue;
            }
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    let ri = tab[i][width - 1].clone() / tab[i][enter].clone();
                    let rl = tab[l][width - 1].clone() / tab[l][enter].clone();
                    match ri.cmp_value(&rl) {
                        Ordering::Less => Some(i),
                        Ordering::Equal if basis[i] < basis[l] => Some(i),
                        _ => Some(l),
                    }
                }
            };
        }
        let Some(r) = leave else {
            return LpOutcome::Unbounded;
        };
        let pivot = tab[r][enter].clone();
        for v in tab[r].iter_mut() {
            *v = v.clone() / pivot.clone();
        }
        let pivot_row = tab[r].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i == r || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v = v.clone() - f.clone() * p.clone();
            }
        }
        let f = cost[enter].clone();
        for (v, p) in cost.iter_mut().zip(&pivot_row) {
            *v = v.clone() - f.clone() * p.clone();
        }
        basis[r] = enter;
    }

    let mut x = vec![T::zero(); n + m];
    for (i, &j) in basis.iter().enumerate() {
        x[j] = tab[i][width - 1].clone();
    }
    let slack = x.split_off(n);
    LpOutcome::Optimal {
        value: -cost[width - 1].clone(),
        x,
        slack,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn textbook_problem() {
        // max x + y s.t. x + 2y <= 4, 3x + y <= 6
        let a = vec![vec![1.0, 2.0], vec![3.0, 1.0]];
        match maximize(&[1.0, 1.0], &a, &[4.0, 6.0]) {
            LpOutcome::Optimal { value, x, .. } => {
                assert!((value - 2.8).abs() < 1e-12);
                assert!((x[0] - 1.6).abs() < 1e-12 && (x[1] - 1.2).abs() < 1e-12);
            }
            LpOutcome::Unbounded => panic!("bounded"),
        }
    }

    #[test]
    fn unbounded_detected() {
        let a = vec![vec![-1.0]];
        assert_eq!(maximize(&[1.0], &a, &[3.0]), LpOutcome::Unbounded);
    }

    #[test]
    fn exact_surd_tableau() {
        // max g s.t. 2√2·g <= 3
        let two = BigInt::from(2);
        let row = vec![QuadraticSurd::sqrt_times(
            BigRational::from_integer(2.into()),
            &two,
        )];
        let out = maximize(
            &[QuadraticSurd::from_int(1)],
            &[row],
            &[QuadraticSurd::from_int(3)],
        );
        let LpOutcome::Optimal { value, .. } = out else {
            panic!("bounded")
        };
        let expected = QuadraticSurd::sqrt_times(BigRational::new(3.into(), 4.into()), &two);
        assert_eq!(value, expected);
    }
}
