//! Combinatorial enumeration of fundamental-domain types.
//!
//! A fundamental domain of G = [3,3,...,3] unfolds from a tree surface graph
//! on the quotient sphere whose vertices are the `l` order-3 rotation centers
//! (degree `1..=l-1`) and `w` additional points of trivial stabilizer (degree
//! `3..=l`). Only the degree census matters for the radius equation, so a
//! domain type is the nonnegative integer solution of the linear system
//!
//! ```text
//!     sum_i A_i = l,   sum_j B_j = w,   sum_i i*A_i + sum_j j*B_j = 2(l+w-1) = n
//! ```
//!
//! for some `0 <= w <= l-2`, where `A_i` counts rotation centers of degree `i`
//! and `B_j` additional points of degree `j`. All arithmetic here is exact.

use serde::Serialize;

use crate::error::Error;
use crate::Result;

/// The group G = [3,3,...,3] identified by its number of order-3 rotation
/// centers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroupSpec {
    l: u32,
}

impl GroupSpec {
    pub fn new(l: u32) -> Result<Self> {
        if l < 4 {
            return Err(Error::InvalidL(l));
        }
        Ok(Self { l })
    }

    pub fn l(self) -> u32 {
        self.l
    }
}

/// One domain type: the degree census `{A_i; B_j}` of a tree surface graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeTypeSolution {
    /// `rotational[i-1]` = number of rotation centers of tree degree `i`,
    /// for `i = 1..=l-1`.
    rotational: Vec<u32>,
    /// `additional[j-3]` = number of additional points of tree degree `j`,
    /// for `j = 3..=l`.
    additional: Vec<u32>,
    /// Total number of additional points.
    w: u32,
    /// Polygon side (and vertex) count, `2(l + w - 1)`.
    n: u32,
}

impl TreeTypeSolution {
    pub fn rotational_counts(&self) -> &[u32] {
        &self.rotational
    }

    pub fn additional_counts(&self) -> &[u32] {
        &self.additional
    }

    pub fn w(&self) -> u32 {
        self.w
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Iterates `(degree, count)` over rotation-center degrees with nonzero
    /// count.
    pub fn rotational_degrees(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.rotational
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(idx, &c)| (idx as u32 + 1, c))
    }

    /// Iterates `(degree, count)` over additional-point degrees with nonzero
    /// count.
    pub fn additional_degrees(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.additional
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(idx, &c)| (idx as u32 + 3, c))
    }

    /// Compact census descriptor, e.g. `A1=4 B3=2`.
    pub fn descriptor(&self) -> String {
        let mut parts: Vec<String> = self
            .rotational_degrees()
            .map(|(i, c)| format!("A{i}={c}"))
            .collect();
        parts.extend(self.additional_degrees().map(|(j, c)| format!("B{j}={c}")));
        parts.join(" ")
    }

    /// Checks every census invariant against the group; used by tests and the
    /// verification command.
    pub fn validate(&self, g: GroupSpec) -> bool {
        let l = g.l();
        let sum_a: u32 = self.rotational.iter().sum();
        let sum_b: u32 = self.additional.iter().sum();
        let handshake: u32 = self
            .rotational_degrees()
            .map(|(i, c)| i * c)
            .chain(self.additional_degrees().map(|(j, c)| j * c))
            .sum();
        self.rotational.len() == (l - 1) as usize
            && self.additional.len() == (l - 2) as usize
            && sum_a == l
            && sum_b == self.w
            && self.w <= l - 2
            && handshake == 2 * (l + self.w - 1)
            && self.n == handshake
    }
}

/// Side-count bounds for fundamental polygons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrbifoldBounds {
    pub n_min: i64,
    pub n_max: i64,
}

/// Maximum number of additional points a tree surface graph of G can carry:
/// `l - 2`.
pub fn max_additional_points(g: GroupSpec) -> u32 {
    g.l() - 2
}

/// Side-count bounds `2l - 2 <= n <= 4l - 6` for G = [3,3,...,3].
pub fn side_bounds(g: GroupSpec) -> OrbifoldBounds {
    let l = g.l() as i64;
    OrbifoldBounds {
        n_min: 2 * l - 2,
        n_max: 4 * l - 6,
    }
}

/// General side-count bounds for a plane group given by its signature data:
/// orientability factor `alpha` (2 orientable, 1 not), genus `g`, rotation
/// center count `l`, boundary component count `q` of which `q0` carry no
/// dihedral corner, and per-component dihedral corner counts `l_k`.
///
/// ```text
///     n_min = 2 alpha g                                        if l = q = 0
///     n_min = q0 + sum(l_k) + 2 alpha g + 2l + 2q - 2          otherwise
///     n_max = sum(l_k) + 6 alpha g + 4l + 5q - 6
/// ```
pub fn orbifold_side_bounds(
    alpha: u32,
    g: u32,
    l: u32,
    q: u32,
    q0: u32,
    l_k: &[u32],
) -> Result<OrbifoldBounds> {
    if alpha != 1 && alpha != 2 {
        return Err(Error::InvalidArgument(format!(
            "orientability factor must be 1 or 2, got {alpha}"
        )));
    }
    if q0 > q {
        return Err(Error::InvalidArgument(format!(
            "q0 = {q0} exceeds boundary component count q = {q}"
        )));
    }
    if l_k.len() != q as usize {
        return Err(Error::InvalidArgument(format!(
            "expected {q} dihedral corner counts, got {}",
            l_k.len()
        )));
    }
    let (alpha, g, l, q, q0) = (alpha as i64, g as i64, l as i64, q as i64, q0 as i64);
    let corner_sum: i64 = l_k.iter().map(|&v| v as i64).sum();
    let n_min = if l == 0 && q == 0 {
        2 * alpha * g
    } else {
        q0 + corner_sum + 2 * alpha * g + 2 * l + 2 * q - 2
    };
    let n_max = corner_sum + 6 * alpha * g + 4 * l + 5 * q - 6;
    if n_min > n_max {
        return Err(Error::InvalidArgument(format!(
            "degenerate signature: n_min {n_min} exceeds n_max {n_max}"
        )));
    }
    Ok(OrbifoldBounds { n_min, n_max })
}

/// All domain types of G, sorted canonically.
///
/// Within each admissible `w` the rotation-center counts are enumerated as
/// bounded compositions of `l`, then the additional-point counts as bounded
/// compositions of `w`, pruning both searches with the handshake identity.
/// The canonical order is ascending `w`, then the degree vectors compared
/// from the highest degree down (fewer high-degree vertices first), which
/// reproduces the published type numbering for l = 4.
pub fn enumerate_tree_types(g: GroupSpec) -> Vec<TreeTypeSolution> {
    let l = g.l();
    let mut out = Vec::new();
    for w in 0..=max_additional_points(g) {
        let n = 2 * (l + w - 1);
        let mut block = Vec::new();
        let mut rot = vec![0u32; (l - 1) as usize];
        compose_rotational(l, w, 1, l, n, &mut rot, &mut block);
        block.sort_by(|a, b| {
            let ra = a.rotational.iter().rev();
            let rb = b.rotational.iter().rev();
            ra.cmp(rb).then_with(|| {
                a.additional.iter().rev().cmp(b.additional.iter().rev())
            })
        });
        out.extend(block);
    }
    out
}

/// Fills rotation-center counts for degrees `deg..=l-1` with `remaining`
/// centers left and `weight_budget` of the handshake weight unspent.
fn compose_rotational(
    l: u32,
    w: u32,
    deg: u32,
    remaining: u32,
    weight_budget: u32,
    rot: &mut Vec<u32>,
    out: &mut Vec<TreeTypeSolution>,
) {
    if deg == l {
        debug_assert_eq!(remaining, 0);
        // Additional points must absorb exactly the remaining weight with
        // degrees in [3, l].
        if weight_budget < 3 * w || weight_budget > l * w {
            return;
        }
        let mut add = vec![0u32; (l - 2) as usize];
        compose_additional(l, 3, w, weight_budget, &mut add, rot, out);
        return;
    }
    if deg == l - 1 {
        // Last rotational degree: forced count.
        let count = remaining;
        let weight = deg * count;
        if weight <= weight_budget {
            rot[(deg - 1) as usize] = count;
            compose_rotational(l, w, deg + 1, 0, weight_budget - weight, rot, out);
            rot[(deg - 1) as usize] = 0;
        }
        return;
    }
    for count in 0..=remaining {
        let weight = deg * count;
        if weight > weight_budget {
            break;
        }
        rot[(deg - 1) as usize] = count;
        compose_rotational(l, w, deg + 1, remaining - count, weight_budget - weight, rot, out);
        rot[(deg - 1) as usize] = 0;
    }
}

/// Fills additional-point counts for degrees `deg..=l` with `remaining` points
/// left, requiring them to consume exactly `weight_budget`.
fn compose_additional(
    l: u32,
    deg: u32,
    remaining: u32,
    weight_budget: u32,
    add: &mut Vec<u32>,
    rot: &[u32],
    out: &mut Vec<TreeTypeSolution>,
) {
    if deg == l {
        // Last additional degree: forced count.
        if remaining * deg == weight_budget {
            add[(deg - 3) as usize] = remaining;
            push_solution(rot, add, out);
            add[(deg - 3) as usize] = 0;
        }
        return;
    }
    for count in 0..=remaining {
        let weight = deg * count;
        if weight > weight_budget {
            break;
        }
        let rest = remaining - count;
        let rest_budget = weight_budget - weight;
        // Degrees still available are deg+1..=l.
        if rest_budget < (deg + 1) * rest || rest_budget > l * rest {
            continue;
        }
        add[(deg - 3) as usize] = count;
        compose_additional(l, deg + 1, rest, rest_budget, add, rot, out);
        add[(deg - 3) as usize] = 0;
    }
}

fn push_solution(rot: &[u32], add: &[u32], out: &mut Vec<TreeTypeSolution>) {
    let n = rot
        .iter()
        .enumerate()
        .map(|(idx, &c)| (idx as u32 + 1) * c)
        .chain(add.iter().enumerate().map(|(idx, &c)| (idx as u32 + 3) * c))
        .sum();
    out.push(TreeTypeSolution {
        rotational: rot.to_vec(),
        additional: add.to_vec(),
        w: add.iter().sum(),
        n,
    });
}
