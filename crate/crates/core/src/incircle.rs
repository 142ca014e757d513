//! Incircle radius per domain type, and the global optimum over all types.
//!
//! For a census `{A_i; B_j}` every central angle is expressed through the leaf
//! central angle `beta` (the one at degree-1 rotation centers, where
//! `cosh x = 1/(2 sin(beta/2))`):
//!
//! ```text
//!     beta_i = 2 asin(2 cos(pi/(3i)) sin(beta/2)),   i = 1..=l-1
//!     beta_j = 2 asin(2 cos(pi/j)   sin(beta/2)),    j = 3..=l
//! ```
//!
//! Closing the central angles to a full turn yields one strictly increasing
//! function `h` of `beta` on `[0, K_l]` whose unique root determines the
//! radius. Bisection is used throughout: `h` is proven monotone, so 128
//! halvings land the bracket far below every tolerance in use, and the root
//! error propagates to `x` through arccosh with a modest factor (|dx/dbeta| =
//! |d cosh x/dbeta| / sinh x, of order 10 for the groups covered here).
//!
//! A smaller root means a larger radius; the census with `w = l - 2`
//! additional points degenerates `h` to the linear `(4l-6) beta - 2 pi` and
//! realizes the closed-form optimum `x = arccosh(1/(2 sin(pi/(4l-6))))`.

use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::domain_enum::{enumerate_tree_types, GroupSpec, TreeTypeSolution};
use crate::error::Error;
use crate::hyp_trig::{checked_asin, circle_area, triangle_defect, AngleValue, CoshRadius};
use crate::Result;

/// Default bracket tolerance on the root `beta`.
pub const DEFAULT_TOL: f64 = 1e-13;

/// Least upper bound for the leaf central angle of a group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BetaBound {
    k_l: AngleValue,
}

impl BetaBound {
    pub fn angle(self) -> AngleValue {
        self.k_l
    }

    pub fn radians(self) -> f64 {
        self.k_l.radians()
    }
}

/// Solved incircle data for one domain type.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IncircleResult {
    /// Root of `h`: the central angle at degree-1 rotation centers.
    pub beta1: AngleValue,
    /// Incircle radius, `cosh x = 1/(2 sin(beta1/2))`.
    pub radius: CoshRadius,
    /// Central angle per rotation-center degree present in the census.
    pub rotational_angles: BTreeMap<u32, AngleValue>,
    /// Central angle per additional-point degree present in the census.
    pub additional_angles: BTreeMap<u32, AngleValue>,
    /// Fundamental polygon area from the defect dissection.
    pub polygon_area: f64,
    /// Incircle area `4 pi sinh²(x/2)`.
    pub circle_area: f64,
    /// `circle_area / polygon_area`, in (0, 1).
    pub density: f64,
}

/// `K_l = 2 asin(1/(2 cos(pi/(3(l-1)))))`, the least upper bound keeping
/// every arcsin argument of `h` within `[0, 1]`.
pub fn beta_upper_limit(g: GroupSpec) -> BetaBound {
    let l = g.l() as f64;
    let k = 2.0 * (1.0 / (2.0 * (PI / (3.0 * (l - 1.0))).cos())).asin();
    BetaBound {
        k_l: AngleValue::new(k).expect("K_l lies in (0, pi)"),
    }
}

/// The radius equation left-hand side:
/// `h(beta) = sum_i i A_i beta_i(beta) + sum_j j B_j beta_j(beta) - 2 pi`.
///
/// `h(0) = -2 pi` exactly; errors when an arcsin argument exceeds 1 beyond
/// the roundoff clamp (beta outside `[0, K_l]`).
pub fn h_eval(sol: &TreeTypeSolution, g: GroupSpec, beta: AngleValue) -> Result<f64> {
    debug_assert!(sol.validate(g));
    let s = (beta.radians() / 2.0).sin();
    let mut total = -2.0 * PI;
    for (i, count) in sol.rotational_degrees() {
        let arg = 2.0 * (PI / (3.0 * i as f64)).cos() * s;
        total += (i * count) as f64 * 2.0 * checked_asin(arg)?;
    }
    for (j, count) in sol.additional_degrees() {
        let arg = 2.0 * (PI / j as f64).cos() * s;
        total += (j * count) as f64 * 2.0 * checked_asin(arg)?;
    }
    Ok(total)
}

/// Solves `h(beta) = 0` on `[0, K_l]` and assembles the full incircle data.
///
/// `tol` bounds the final bisection bracket width and must lie in
/// `[1e-14, 1e-6]`. A census whose `h(K_l)` is negative beyond roundoff
/// (-1e-12) cannot close the central angles and is rejected; a tiny negative
/// value is treated as a root at `K_l` itself.
pub fn solve_incircle(sol: &TreeTypeSolution, g: GroupSpec, tol: f64) -> Result<IncircleResult> {
    if !(1e-14..=1e-6).contains(&tol) {
        return Err(Error::InvalidArgument(format!(
            "tolerance {tol} outside [1e-14, 1e-6]"
        )));
    }
    if !sol.validate(g) {
        return Err(Error::InvalidArgument(format!(
            "census {} is not valid for l = {}",
            sol.descriptor(),
            g.l()
        )));
    }
    let k_l = beta_upper_limit(g).radians();
    let h_top = h_eval(sol, g, AngleValue::new(k_l)?)?;
    let beta = if h_top < -1e-12 {
        return Err(Error::NoRoot(format!(
            "h({k_l}) = {h_top} < 0: census {} admits no closing root",
            sol.descriptor()
        )));
    } else if h_top <= 0.0 {
        k_l
    } else {
        let mut lo = 0.0f64;
        let mut hi = k_l;
        for _ in 0..128 {
            let mid = 0.5 * (lo + hi);
            if h_eval(sol, g, AngleValue::new(mid)?)? < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= tol {
                break;
            }
        }
        0.5 * (lo + hi)
    };

    let beta1 = AngleValue::new(beta)?;
    let radius = CoshRadius::from_cosh(1.0 / (2.0 * (beta / 2.0).sin()))?;
    let s = (beta / 2.0).sin();

    let mut rotational_angles = BTreeMap::new();
    for (i, _) in sol.rotational_degrees() {
        let b = 2.0 * checked_asin(2.0 * (PI / (3.0 * i as f64)).cos() * s)?;
        rotational_angles.insert(i, AngleValue::new(b)?);
    }
    let mut additional_angles = BTreeMap::new();
    for (j, _) in sol.additional_degrees() {
        let b = 2.0 * checked_asin(2.0 * (PI / j as f64).cos() * s)?;
        additional_angles.insert(j, AngleValue::new(b)?);
    }

    let polygon_area = defect_area(sol, &rotational_angles, &additional_angles)?;
    let circle = circle_area(radius);
    let density = circle / polygon_area;
    if !(0.0..1.0).contains(&density) {
        return Err(Error::Domain(format!("density {density} outside (0, 1)")));
    }
    Ok(IncircleResult {
        beta1,
        radius,
        rotational_angles,
        additional_angles,
        polygon_area,
        circle_area: circle,
        density,
    })
}

/// Polygon area as twice the defect sum of the dissecting right triangles.
/// Census-independent: always `(4l/3 - 4) pi`.
pub fn polygon_area(sol: &TreeTypeSolution, g: GroupSpec, res: &IncircleResult) -> Result<f64> {
    debug_assert!(sol.validate(g));
    defect_area(sol, &res.rotational_angles, &res.additional_angles)
}

fn defect_area(
    sol: &TreeTypeSolution,
    rotational: &BTreeMap<u32, AngleValue>,
    additional: &BTreeMap<u32, AngleValue>,
) -> Result<f64> {
    let mut area = 0.0;
    for (i, count) in sol.rotational_degrees() {
        let alpha = AngleValue::new(2.0 * PI / (3.0 * i as f64))?;
        let beta = rotational[&i];
        area += (i * count) as f64 * 2.0 * triangle_defect(alpha, beta)?;
    }
    for (j, count) in sol.additional_degrees() {
        let alpha = AngleValue::new(2.0 * PI / j as f64)?;
        let beta = additional[&j];
        area += (j * count) as f64 * 2.0 * triangle_defect(alpha, beta)?;
    }
    Ok(area)
}

/// Closed-form optimal radius `x = arccosh(1/(2 sin(pi/(4l-6))))`.
pub fn optimal_radius_closed_form(g: GroupSpec) -> CoshRadius {
    let l = g.l() as f64;
    CoshRadius::from_cosh(1.0 / (2.0 * (PI / (4.0 * l - 6.0)).sin()))
        .expect("closed form exceeds 1 for l >= 4")
}

/// Solves every census of the group and returns the one with the largest
/// radius (the `A_1 = l, B_3 = l-2` census, matching the closed form).
///
/// Censuses are solved in canonical order and reduced sequentially, so the
/// result is deterministic.
pub fn best_over_types(g: GroupSpec) -> Result<(TreeTypeSolution, IncircleResult)> {
    let mut best: Option<(TreeTypeSolution, IncircleResult)> = None;
    for sol in enumerate_tree_types(g) {
        let res = solve_incircle(&sol, g, DEFAULT_TOL)?;
        let better = match &best {
            None => true,
            Some((_, cur)) => res.radius.x() > cur.radius.x(),
        };
        if better {
            best = Some((sol, res));
        }
    }
    best.ok_or_else(|| Error::InvalidArgument("no censuses enumerated".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(l: u32) -> GroupSpec {
        GroupSpec::new(l).unwrap()
    }

    fn census(g: GroupSpec, idx: usize) -> TreeTypeSolution {
        enumerate_tree_types(g)[idx].clone()
    }

    #[test]
    fn beta_upper_limit_values() {
        // Direct formula evaluations, cross-checked against the bound chain.
        let k4 = beta_upper_limit(group(4)).radians();
        assert!((k4 - 2.0 * (1.0 / (2.0 * (PI / 9.0).cos())).asin()).abs() < 1e-15);
        assert!((k4 - 1.1221315661877005).abs() < 1e-12);
        let k5 = beta_upper_limit(group(5)).radians();
        assert!((k5 - 2.0 * (1.0 / (2.0 * (PI / 12.0).cos())).asin()).abs() < 1e-15);
        // K_l decreases toward 2 asin(1/2) = pi/3 as l grows.
        let k_big = beta_upper_limit(group(4000)).radians();
        assert!(k4 > k5 && k5 > k_big);
        assert!((k_big - PI / 3.0).abs() < 1e-6);
        assert!(k_big > PI / 3.0);
    }

    #[test]
    fn h_at_zero_is_minus_two_pi() {
        for l in 4..=8 {
            let g = group(l);
            for sol in enumerate_tree_types(g) {
                let h0 = h_eval(&sol, g, AngleValue::new(0.0).unwrap()).unwrap();
                assert_eq!(h0, -2.0 * PI);
            }
        }
    }

    #[test]
    fn h_linear_for_w_max_census() {
        // A1 = 4, B3 = 2 reduces h to 10 beta - 2 pi.
        let g = group(4);
        let sol = census(g, 4);
        let beta = AngleValue::new(2.0 * PI / 10.0).unwrap();
        assert!(h_eval(&sol, g, beta).unwrap().abs() < 1e-12);
    }

    #[test]
    fn h_vanishes_at_solved_root() {
        let g = group(4);
        let sol = census(g, 0);
        let res = solve_incircle(&sol, g, DEFAULT_TOL).unwrap();
        assert!(h_eval(&sol, g, res.beta1).unwrap().abs() < 1e-11);
    }

    #[test]
    fn table_of_radii_for_l4() {
        let g = group(4);
        let expected = [0.962423, 0.927539, 1.031718, 1.011595, 1.061275];
        for (idx, want) in expected.iter().enumerate() {
            let res = solve_incircle(&census(g, idx), g, DEFAULT_TOL).unwrap();
            assert!(
                (res.radius.x() - want).abs() < 5e-6,
                "census {idx}: {} vs {want}",
                res.radius.x()
            );
        }
    }

    #[test]
    fn regular_case_constants() {
        let g = group(4);
        let res = solve_incircle(&census(g, 4), g, DEFAULT_TOL).unwrap();
        assert!((res.radius.x() - 1.0612750619050357).abs() < 1e-10);
        assert!((res.density - 0.9270509831248424).abs() < 1e-10);
        assert!((res.polygon_area - 4.0 * PI / 3.0).abs() < 1e-11);
    }

    #[test]
    fn invariants_of_solved_results() {
        for l in 4..=8 {
            let g = group(l);
            for sol in enumerate_tree_types(g) {
                let res = solve_incircle(&sol, g, DEFAULT_TOL).unwrap();
                // Leaf relation (the tangency identity at degree-1 centers).
                let leaf = (PI / 3.0).cos()
                    - res.radius.cosh_x() * (res.beta1.radians() / 2.0).sin();
                assert!(leaf.abs() < 1e-11);
                // Central angles close to a full turn.
                let turn: f64 = sol
                    .rotational_degrees()
                    .map(|(i, c)| (i * c) as f64 * res.rotational_angles[&i].radians())
                    .chain(
                        sol.additional_degrees()
                            .map(|(j, c)| (j * c) as f64 * res.additional_angles[&j].radians()),
                    )
                    .sum();
                assert!((turn - 2.0 * PI).abs() < 1e-10, "census {}", sol.descriptor());
                // Density is a proper fraction.
                assert!(res.density > 0.0 && res.density < 1.0);
            }
        }
    }

    #[test]
    fn area_is_census_independent() {
        for l in 4..=10 {
            let g = group(l);
            let want = (4.0 * l as f64 / 3.0 - 4.0) * PI;
            for sol in enumerate_tree_types(g) {
                let res = solve_incircle(&sol, g, DEFAULT_TOL).unwrap();
                assert!((res.polygon_area - want).abs() < 1e-9);
                let recomputed = polygon_area(&sol, g, &res).unwrap();
                assert!((recomputed - want).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn closed_form_matches_best_census() {
        for l in 4..=10 {
            let g = group(l);
            let (sol, res) = best_over_types(g).unwrap();
            assert_eq!(sol.rotational_counts()[0], l);
            assert_eq!(sol.w(), l - 2);
            let closed = optimal_radius_closed_form(g);
            assert!(
                (res.radius.x() - closed.x()).abs() < 1e-10,
                "l = {l}: {} vs {}",
                res.radius.x(),
                closed.x()
            );
        }
    }

    #[test]
    fn closed_form_grows_with_l() {
        let mut prev = 0.0;
        for l in 4..=12 {
            let x = optimal_radius_closed_form(group(l)).x();
            assert!(x > prev);
            prev = x;
        }
    }

    #[test]
    fn degenerate_root_is_linear() {
        for l in 4..=12 {
            let g = group(l);
            let sol = enumerate_tree_types(g).pop().unwrap();
            assert_eq!(sol.w(), l - 2);
            let res = solve_incircle(&sol, g, DEFAULT_TOL).unwrap();
            let want = 2.0 * PI / (4.0 * l as f64 - 6.0);
            assert!((res.beta1.radians() - want).abs() < 1e-12);
        }
    }

    #[test]
    fn minimum_radius_census_for_l4() {
        let g = group(4);
        let mut results: Vec<(usize, f64)> = enumerate_tree_types(g)
            .iter()
            .enumerate()
            .map(|(i, s)| (i, solve_incircle(s, g, DEFAULT_TOL).unwrap().radius.x()))
            .collect();
        results.sort_by(|a, b| a.1.total_cmp(&b.1));
        // The three-leaves-on-one-center census is the worst.
        assert_eq!(results[0].0, 1);
        assert!((results[0].1 - 0.927539).abs() < 5e-6);
    }

    #[test]
    fn tolerance_validation() {
        let g = group(4);
        let sol = census(g, 0);
        assert!(solve_incircle(&sol, g, 1e-3).is_err());
        assert!(solve_incircle(&sol, g, 1e-15).is_err());
    }

    #[test]
    fn monotone_h_on_grid() {
        for l in 4..=6 {
            let g = group(l);
            let k_l = beta_upper_limit(g).radians();
            for sol in enumerate_tree_types(g) {
                let mut prev = f64::NEG_INFINITY;
                for k in 0..=200 {
                    let beta = AngleValue::new(k_l * k as f64 / 200.0).unwrap();
                    let h = h_eval(&sol, g, beta).unwrap();
                    assert!(h > prev, "census {} at step {k}", sol.descriptor());
                    prev = h;
                }
                assert!(prev >= 0.0, "h(K_l) >= 0 for {}", sol.descriptor());
            }
        }
    }
}
