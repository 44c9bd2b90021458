//! Brute-force joint eigenvector enumeration, independent of the solver.
//!
//! Eigenvalue candidates of a matrix whose entries have common denominator
//! `d` lie in `(1/d)·Z[i]` and inside the row-sum disc, so scanning that
//! lattice with a cofactor determinant finds all of them in `Q(i)`.

use num_traits::{Signed, ToPrimitive};
use recspin::exact::{GaussianRational as GR, MatrixGR};

pub type Rows = Vec<Vec<GR>>;

pub fn det(m: &Rows) -> GR {
    let n = m.len();
    if n == 0 {
        return GR::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = GR::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Rows = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != c)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * &det(&minor);
        if c % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}

fn shifted(a: &MatrixGR, z: &GR) -> Rows {
    (0..a.rows())
        .map(|i| {
            (0..a.cols())
                .map(|j| {
                    if i == j {
                        &a.row(i)[j] - z
                    } else {
                        a.row(i)[j].clone()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn eigenvalues(a: &MatrixGR) -> Vec<GR> {
    let d = a
        .entries()
        .iter()
        .map(|x| x.denominator_lcm().to_i64().expect("small denominator"))
        .fold(1i64, |acc, x| acc / gcd(acc, x) * x);
    let bound = (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .map(|x| (x.re().abs() + x.im().abs()).to_f64().unwrap())
                .sum::<f64>()
        })
        .fold(0.0, f64::max);
    let r = (bound * d as f64).ceil() as i64;
    let mut out = Vec::new();
    for re in -r..=r {
        for im in -r..=r {
            let z = GR::from_fractions(re, d, im, d);
            if det(&shifted(a, &z)).is_zero() {
                out.push(z);
            }
        }
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Basis of `{v : rows·v = 0}` by Gauss-Jordan elimination.
pub fn null_space(rows: &Rows, dim: usize) -> Rows {
    let mut m: Rows = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        m[r] = m[r].iter().map(|x| x * &inv).collect();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..dim)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![GR::zero(); dim];
            v[free] = GR::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[k][free];
            }
            v
        })
        .collect()
}

pub struct JointSpace {
    pub character: Vec<GR>,
    pub equations: Rows,
    pub basis: Rows,
}

/// Every nonzero `∩ ker(A_j - z_j)` over eigenvalue tuples `(z_j)`.
pub fn joint_eigenspaces(gens: &[MatrixGR], dim: usize) -> Vec<JointSpace> {
    let mut states: Vec<(Vec<GR>, Rows)> = vec![(Vec::new(), Vec::new())];
    for a in gens {
        let zs = eigenvalues(a);
        let mut next = Vec::new();
        for (chars, eqs) in &states {
            for z in &zs {
                let mut e = eqs.clone();
                e.extend(shifted(a, z));
                if !null_space(&e, dim).is_empty() {
                    let mut c = chars.clone();
                    c.push(z.clone());
                    next.push((c, e));
                }
            }
        }
        states = next;
    }
    states
        .into_iter()
        .map(|(character, equations)| {
            let basis = null_space(&equations, dim);
            JointSpace {
                character,
                equations,
                basis,
            }
        })
        .collect()
}

pub fn satisfies(equations: &Rows, v: &[GR]) -> bool {
    equations
        .iter()
        .all(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<GR>().is_zero())
}

pub fn mat_rows(m: &MatrixGR) -> Rows {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}
