//! Multi-start Levenberg–Marquardt search for braiding matrices.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::cpoly::NumPoly;
use super::data::known_braidings_at_q_squared;
use super::{ConstraintSet, RMatrixError};

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub q0: f64,
    pub seed: u64,
    pub starts: usize,
    pub max_iter: usize,
    /// Half-width of the box random starts are drawn from.
    pub box_radius: f64,
    pub dedup_tol: f64,
    pub verify_tol: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            q0: 1.3,
            seed: 7,
            starts: 200,
            max_iter: 400,
            box_radius: 3.0,
            dedup_tol: 1e-6,
            verify_tol: 1e-10,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Solution {
    pub c: Vec<f64>,
    /// Largest absolute constraint value.
    pub residual: f64,
    /// Name of the matching known solution, if any.
    pub label: Option<String>,
    /// Dimension of the Jacobian kernel. Positive for points on continuous
    /// families, but also for isolated roots of higher multiplicity.
    pub nullity: usize,
    /// Whether continuation along a kernel direction finds nearby
    /// distinct solutions, i.e. the point lies on a curve of solutions.
    pub on_family: bool,
    /// Number of starts that converged to this point.
    pub hits: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub q0: f64,
    pub starts: usize,
    pub converged: usize,
    pub constraints: usize,
    pub solutions: Vec<Solution>,
    /// Dimension of the affine hull of all family members found.
    pub family_dim: usize,
    /// Unknowns that vary across the family members found.
    pub family_varying: Vec<String>,
    /// The named solutions evaluated at `q0`.
    pub templates: Vec<TemplateCheck>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TemplateCheck {
    pub label: String,
    pub c: Vec<f64>,
    pub residual: f64,
    pub on_family: bool,
    /// Whether a returned solution matches this template.
    pub recovered: bool,
}

impl SolveReport {
    pub fn labels(&self) -> Vec<String> {
        self.solutions
            .iter()
            .map(|s| s.label.clone().unwrap_or_else(|| "unlabeled".into()))
            .collect()
    }

    /// Solutions lying on a positive-dimensional family.
    pub fn non_isolated(&self) -> usize {
        self.solutions.iter().filter(|s| s.on_family).count()
    }

    pub fn isolated(&self) -> impl Iterator<Item = &Solution> {
        self.solutions.iter().filter(|s| !s.on_family)
    }
}

struct System {
    polys: Vec<NumPoly>,
    n: usize,
}

impl System {
    fn residual(&self, x: &[f64]) -> DVector<f64> {
        DVector::from_iterator(self.polys.len(), self.polys.iter().map(|p| p.eval(x)))
    }

    fn jacobian(&self, x: &[f64]) -> DMatrix<f64> {
        let mut j = DMatrix::zeros(self.polys.len(), self.n);
        let mut g = vec![0.0; self.n];
        for (r, p) in self.polys.iter().enumerate() {
            g.iter_mut().for_each(|v| *v = 0.0);
            p.gradient(x, &mut g);
            for (c, v) in g.iter().enumerate() {
                j[(r, c)] = *v;
            }
        }
        j
    }

    fn levenberg_marquardt(&self, x0: Vec<f64>, max_iter: usize) -> Vec<f64> {
        let mut x = DVector::from_vec(x0);
        let mut f = self.residual(x.as_slice());
        let mut cost = f.norm_squared();
        let mut lambda = 1e-3;
        for _ in 0..max_iter {
            if cost < 1e-30 || !cost.is_finite() {
                break;
            }
            let j = self.jacobian(x.as_slice());
            let jt = j.transpose();
            let a = &jt * &j;
            let g = &jt * &f;
            let mut improved = false;
            for _ in 0..30 {
                let mut m = a.clone();
                for i in 0..self.n {
                    m[(i, i)] += lambda * (a[(i, i)] + 1e-9);
                }
                let Some(step) = m.lu().solve(&(-&g)) else {
                    lambda *= 10.0;
                    continue;
                };
                let xn = &x + &step;
                let fnew = self.residual(xn.as_slice());
                let cn = fnew.norm_squared();
                if cn.is_finite() && cn < cost {
                    let small = step.norm() < 1e-15 * (1.0 + x.norm());
                    x = xn;
                    f = fnew;
                    cost = cn;
                    lambda = (lambda / 3.0).max(1e-15);
                    improved = !small;
                    break;
                }
                lambda *= 4.0;
                if lambda > 1e16 {
                    break;
                }
            }
            if !improved {
                break;
            }
        }
        x.as_slice().to_vec()
    }

    /// Kernel dimension of the Jacobian and unit vectors spanning it.
    fn kernel(&self, x: &[f64]) -> (usize, Vec<DVector<f64>>) {
        let svd = self.jacobian(x).svd(false, true);
        let sv = &svd.singular_values;
        let max = sv.iter().cloned().fold(0.0, f64::max);
        let tol = 1e-7 * max.max(1.0);
        let vt = svd.v_t.expect("requested");
        let mut dirs: Vec<DVector<f64>> = sv
            .iter()
            .enumerate()
            .filter(|(_, &s)| s <= tol)
            .map(|(i, _)| vt.row(i).transpose())
            .collect();
        // thin SVD drops directions when there are fewer rows than unknowns
        let rank = sv.len() - dirs.len();
        if rank < self.n && dirs.len() < self.n - rank {
            dirs.clear();
        }
        (self.n - rank, dirs)
    }

    /// Steps off `x` along kernel directions and re-solves; a curve of
    /// solutions shows up as a converged point about a step away, while an
    /// isolated (possibly multiple) root pulls the iterate back. Near a
    /// singular point the kernel basis is only determined up to rotation,
    /// so directions are swept through each plane of basis vectors.
    fn on_family(&self, x: &[f64], dirs: &[DVector<f64>], opts: &SolveOptions) -> bool {
        let h = 1e-2;
        let mut probes: Vec<DVector<f64>> = dirs.to_vec();
        for i in 0..dirs.len() {
            for j in i + 1..dirs.len() {
                for k in 1..12 {
                    let t = std::f64::consts::PI * k as f64 / 12.0;
                    probes.push(&dirs[i] * t.cos() + &dirs[j] * t.sin());
                }
            }
        }
        probes.iter().any(|dir| {
            [h, -h].iter().any(|&t| {
                let x0: Vec<f64> = x.iter().zip(dir.iter()).map(|(a, d)| a + t * d).collect();
                let y = self.levenberg_marquardt(x0, opts.max_iter);
                max_abs(&self.residual(&y)) < opts.verify_tol && dist(&y, x) > h / 4.0
            })
        })
    }
}

fn max_abs(v: &DVector<f64>) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

fn numeric_system(cs: &ConstraintSet, q0: f64) -> Result<System, RMatrixError> {
    let polys = cs
        .constraints
        .iter()
        .map(|c| c.poly.to_numeric(q0, q0 * q0))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(System {
        polys,
        n: cs.unknowns.len(),
    })
}

/// Runs the local solver from `x0` at `q = q0`, `Q1 = q0^2`; returns the
/// end point and its largest absolute constraint value.
pub fn refine_numeric(
    cs: &ConstraintSet,
    q0: f64,
    x0: &[f64],
    max_iter: usize,
) -> Result<(Vec<f64>, f64), RMatrixError> {
    let sys = numeric_system(cs, q0)?;
    let x = sys.levenberg_marquardt(x0.to_vec(), max_iter);
    let r = max_abs(&sys.residual(&x));
    Ok((x, r))
}

/// Searches for real solutions of `cs` (constraints on `C1..C14` with
/// `Q1 = q^2`) at `q = q0`.
pub fn solve_braidings_numeric(cs: &ConstraintSet, opts: &SolveOptions) -> Result<SolveReport, RMatrixError> {
    let q0 = opts.q0;
    if !(q0 > 0.0) || (q0 - 1.0).abs() < 1e-12 || !q0.is_finite() {
        return Err(RMatrixError::BadPoint(q0));
    }
    let q1 = q0 * q0;
    let sys = numeric_system(cs, q0)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let starts: Vec<Vec<f64>> = (0..opts.starts)
        .map(|_| {
            (0..sys.n)
                .map(|_| rng.gen_range(-opts.box_radius..opts.box_radius))
                .collect()
        })
        .collect();
    let finals: Vec<Vec<f64>> = starts
        .into_par_iter()
        .map(|x0| sys.levenberg_marquardt(x0, opts.max_iter))
        .collect();

    let mut found: Vec<Solution> = Vec::new();
    let mut converged = 0;
    for x in finals {
        let res = max_abs(&sys.residual(&x));
        if !(res < opts.verify_tol) {
            continue;
        }
        converged += 1;
        if let Some(s) = found.iter_mut().find(|s| dist(&s.c, &x) < opts.dedup_tol) {
            s.hits += 1;
            continue;
        }
        let (nullity, dirs) = sys.kernel(&x);
        found.push(Solution {
            nullity,
            on_family: sys.on_family(&x, &dirs, opts),
            c: x,
            residual: res,
            label: None,
            hits: 1,
        });
    }

    let templates: Vec<(String, Vec<f64>)> = known_braidings_at_q_squared()
        .into_iter()
        .map(|(name, c)| {
            let v = c.iter().map(|x| x.eval_f64(q0, q1)).collect::<Result<Vec<_>, _>>()?;
            Ok((name.to_string(), v))
        })
        .collect::<Result<_, RMatrixError>>()?;
    for s in &mut found {
        s.label = templates
            .iter()
            .find(|(_, t)| dist(t, &s.c) < opts.dedup_tol)
            .map(|(n, _)| n.clone());
    }
    found.sort_by(|a, b| {
        let ka = a
            .label
            .as_deref()
            .map(|l| templates.iter().position(|t| t.0 == l).unwrap_or(usize::MAX))
            .unwrap_or(usize::MAX);
        let kb = b
            .label
            .as_deref()
            .map(|l| templates.iter().position(|t| t.0 == l).unwrap_or(usize::MAX))
            .unwrap_or(usize::MAX);
        ka.cmp(&kb).then_with(|| {
            a.c.iter()
                .zip(&b.c)
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    let members: Vec<&Vec<f64>> = found.iter().filter(|s| s.on_family).map(|s| &s.c).collect();
    let (family_dim, varying) = affine_hull(&members, sys.n);
    let templates = templates
        .into_iter()
        .map(|(label, c)| {
            let residual = max_abs(&sys.residual(&c));
            let on_family = residual < opts.verify_tol && {
                let (_, dirs) = sys.kernel(&c);
                sys.on_family(&c, &dirs, opts)
            };
            let recovered = found.iter().any(|s| s.label.as_deref() == Some(label.as_str()));
            TemplateCheck {
                label,
                c,
                residual,
                on_family,
                recovered,
            }
        })
        .collect();
    Ok(SolveReport {
        q0,
        starts: opts.starts,
        converged,
        constraints: sys.polys.len(),
        solutions: found,
        family_dim,
        family_varying: varying.into_iter().map(|i| cs.unknowns[i].clone()).collect(),
        templates,
    })
}

fn affine_hull(points: &[&Vec<f64>], n: usize) -> (usize, Vec<usize>) {
    if points.len() < 2 {
        return (0, Vec::new());
    }
    let m = points.len();
    let mean: Vec<f64> = (0..n)
        .map(|j| points.iter().map(|p| p[j]).sum::<f64>() / m as f64)
        .collect();
    let d = DMatrix::from_fn(m, n, |i, j| points[i][j] - mean[j]);
    let sv = d.singular_values();
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let dim = sv.iter().filter(|&&s| s > 1e-6 * max.max(1e-300) && s > 1e-9).count();
    let varying = (0..n)
        .filter(|&j| points.iter().any(|p| (p[j] - mean[j]).abs() > 1e-6))
        .collect();
    (dim, varying)
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}
