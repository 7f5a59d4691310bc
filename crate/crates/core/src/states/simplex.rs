//! Dense two-phase primal simplex in exact arithmetic.
//!
//! Solves `max c·z  s.t.  A z <= b, z >= 0` where `b` may have negative
//! entries. Bland's rule (smallest eligible index for both the entering and
//! the leaving variable) rules out cycling, and the deterministic pivoting
//! makes returned vertices reproducible.

use super::Scalar;

#[derive(Debug, Clone)]
struct Tableau<T> {
    /// Constraint rows; the last entry of each row is the right-hand side.
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    /// Number of columns excluding the right-hand side.
    cols: usize,
}

impl<T: Scalar> Tableau<T> {
    fn pivot(&mut self, objective: &mut [T], row: usize, col: usize) {
        let inv = T::one() / &self.rows[row][col];
        for v in self.rows[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = self.rows[row].clone();
        let eliminate = |target: &mut [T]| {
            let factor = target[col].clone();
            if factor.is_zero() {
                return;
            }
            for (t, p) in target.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *t -= factor.clone() * p;
                }
            }
        };
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i != row {
                eliminate(r);
            }
        }
        eliminate(objective);
        self.basis[row] = col;
    }

    /// Reduced-cost row for maximizing `c` over the first `c.len()` columns,
    /// priced out against the current basis.
    fn priced_objective(&self, c: &[T]) -> Vec<T> {
        let mut obj = vec![T::zero(); self.cols + 1];
        for (j, cj) in c.iter().enumerate() {
            obj[j] = cj.clone();
        }
        for (i, &b) in self.basis.iter().enumerate() {
            if b < c.len() && !c[b].is_zero() {
                let factor = c[b].clone();
                for (o, v) in obj.iter_mut().zip(&self.rows[i]) {
                    *o -= factor.clone() * v;
                }
            }
        }
        obj
    }

    /// Runs Bland's rule over columns `< allowed`. Returns `false` if the
    /// objective is unbounded.
    fn optimize(&mut self, objective: &mut [T], allowed: usize) -> bool {
        loop {
            let Some(col) = (0..allowed).find(|&j| objective[j].is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, T)> = None;
            for (i, r) in self.rows.iter().enumerate() {
                if !r[col].is_positive() {
                    continue;
                }
                let ratio = r[self.cols].clone() / &r[col];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((row, _)) => self.pivot(objective, row, col),
                None => return false,
            }
        }
    }
}

/// A nonempty polytope `{z >= 0 | A z <= b}` together with a feasible basis.
#[derive(Debug, Clone)]
pub struct Polytope<T> {
    tableau: Tableau<T>,
    vars: usize,
}

/// Optimal vertex of a linear objective over a [`Polytope`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Optimum<T> {
    pub value: T,
    pub point: Vec<T>,
}

impl<T: Scalar> Polytope<T> {
    /// Runs phase one. Returns `None` when the polytope is empty.
    pub fn new(a: &[Vec<T>], b: &[T], vars: usize) -> Option<Self> {
        let m = a.len();
        debug_assert_eq!(b.len(), m);
        let negative: Vec<usize> = (0..m).filter(|&i| b[i].is_negative()).collect();
        let slack0 = vars;
        let art0 = vars + m;
        let cols = art0 + negative.len();
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        for i in 0..m {
            let mut row = vec![T::zero(); cols + 1];
            let flip = b[i].is_negative();
            for (j, v) in a[i].iter().enumerate() {
                row[j] = if flip { -v.clone() } else { v.clone() };
            }
            row[slack0 + i] = if flip { -T::one() } else { T::one() };
            row[cols] = if flip { -b[i].clone() } else { b[i].clone() };
            if flip {
                let k = negative.iter().position(|&r| r == i).unwrap();
                row[art0 + k] = T::one();
                basis.push(art0 + k);
            } else {
                basis.push(slack0 + i);
            }
            rows.push(row);
        }
        let mut tableau = Tableau { rows, basis, cols };

        if !negative.is_empty() {
            // phase one: maximize -(sum of artificials)
            let mut c = vec![T::zero(); cols];
            for v in &mut c[art0..] {
                *v = -T::one();
            }
            let mut obj = tableau.priced_objective(&c);
            tableau.optimize(&mut obj, cols);
            if obj[cols].is_positive() {
                return None;
            }
            // drive degenerate artificials out of the basis, dropping
            // redundant rows
            let mut i = 0;
            while i < tableau.rows.len() {
                if tableau.basis[i] >= art0 {
                    match (0..art0).find(|&j| !tableau.rows[i][j].is_zero()) {
                        Some(j) => {
                            let mut scratch = vec![T::zero(); cols + 1];
                            tableau.pivot(&mut scratch, i, j);
                        }
                        None => {
                            tableau.rows.remove(i);
                            tableau.basis.remove(i);
                            continue;
                        }
                    }
                }
                i += 1;
            }
            for r in &mut tableau.rows {
                r.drain(art0..cols);
            }
            tableau.cols = art0;
        }
        Some(Self { tableau, vars })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Maximizes `c·z`; `None` if unbounded.
    pub fn maximize(&self, c: &[T]) -> Option<Optimum<T>> {
        debug_assert_eq!(c.len(), self.vars);
        let mut t = self.tableau.clone();
        let mut obj = t.priced_objective(c);
        if !t.optimize(&mut obj, t.cols) {
            return None;
        }
        let mut point = vec![T::zero(); self.vars];
        for (i, &b) in t.basis.iter().enumerate() {
            if b < self.vars {
                point[b] = t.rows[i][t.cols].clone();
            }
        }
        Some(Optimum {
            value: -obj[t.cols].clone(),
            point,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn rows(a: &[&[i64]]) -> Vec<Vec<BigRational>> {
        a.iter().map(|r| r.iter().map(|&v| q(v, 1)).collect()).collect()
    }

    #[test]
    fn textbook_maximum() {
        // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18  ->  (2, 6), 36
        let a = rows(&[&[1, 0], &[0, 2], &[3, 2]]);
        let b = vec![q(4, 1), q(12, 1), q(18, 1)];
        let p = Polytope::new(&a, &b, 2).unwrap();
        let opt = p.maximize(&[q(3, 1), q(5, 1)]).unwrap();
        assert_eq!(opt.value, q(36, 1));
        assert_eq!(opt.point, vec![q(2, 1), q(6, 1)]);
    }

    #[test]
    fn phase_one_with_lower_bounds() {
        // x + y >= 1 (as -x - y <= -1), x <= 1/2, y <= 1; min x  ->  x = 0, y = 1
        let a = vec![vec![q(-1, 1), q(-1, 1)], vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(1, 1)]];
        let b = vec![q(-1, 1), q(1, 2), q(1, 1)];
        let p = Polytope::new(&a, &b, 2).unwrap();
        let opt = p.maximize(&[q(-1, 1), q(0, 1)]).unwrap();
        assert_eq!(opt.value, q(0, 1));
        assert_eq!(opt.point[1], q(1, 1));
        let opt = p.maximize(&[q(1, 1), q(1, 1)]).unwrap();
        assert_eq!(opt.value, q(3, 2));
    }

    #[test]
    fn empty_polytope() {
        // x <= 1 and x >= 2
        let a = rows(&[&[1], &[-1]]);
        let b = vec![q(1, 1), q(-2, 1)];
        assert!(Polytope::new(&a, &b, 1).is_none());
    }

    #[test]
    fn unbounded_objective() {
        let a = rows(&[&[1, -1]]);
        let b = vec![q(1, 1)];
        let p = Polytope::new(&a, &b, 2).unwrap();
        assert!(p.maximize(&[q(0, 1), q(1, 1)]).is_none());
    }

    #[test]
    fn redundant_equalities_are_dropped() {
        // x = 1 written twice as pairs of inequalities
        let a = rows(&[&[1], &[-1], &[1], &[-1]]);
        let b = vec![q(1, 1), q(-1, 1), q(1, 1), q(-1, 1)];
        let p = Polytope::new(&a, &b, 1).unwrap();
        assert_eq!(p.maximize(&[q(1, 1)]).unwrap().point, vec![q(1, 1)]);
        assert_eq!(p.maximize(&[q(-1, 1)]).unwrap().value, q(-1, 1));
    }

    #[test]
    fn no_variables() {
        let p = Polytope::<BigRational>::new(&[vec![]], &[q(0, 1)], 0).unwrap();
        assert_eq!(p.maximize(&[]).unwrap().value, q(0, 1));
        assert!(Polytope::<BigRational>::new(&[vec![]], &[q(-1, 1)], 0).is_none());
    }

    #[test]
    fn works_with_machine_ratios() {
        use num_rational::Rational64;
        let a = vec![vec![Rational64::new(1, 1), Rational64::new(1, 1)]];
        let b = vec![Rational64::new(1, 1)];
        let p = Polytope::new(&a, &b, 2).unwrap();
        let opt = p
            .maximize(&[Rational64::new(2, 1), Rational64::new(1, 1)])
            .unwrap();
        assert_eq!(opt.value, Rational64::new(2, 1));
    }
}
