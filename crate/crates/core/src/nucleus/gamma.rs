use std::collections::VecDeque;

use num_bigint::BigInt;
use serde::Serialize;

use crate::check::CheckList;
use crate::grassmann::GraphContext;
use crate::projgeom::{cover_type, intersect, CoverType};
use crate::qfield::q_binomial;

use super::family::AlphaFamily;

/// Connected components of `γ_i(x)`: the subgraph of `Γ` induced on `Γ_i(x)`
/// after deleting each edge `yz` for which `y ∩ z` is /-covered by both `y` and `z`.
#[derive(Clone, Debug, Serialize)]
pub struct GammaComponents {
    pub i: usize,
    pub edges_kept: usize,
    pub edges_removed: usize,
    /// Vertex indices, each component sorted, components ordered by least member.
    pub components: Vec<Vec<usize>>,
    #[serde(skip)]
    pub checks: CheckList,
}

impl GammaComponents {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

pub fn gamma_components(gc: &GraphContext, fam: &AlphaFamily, i: usize) -> GammaComponents {
    let geo = gc.geometry();
    let f = geo.field();
    let layer = gc.sphere(i);
    let mut pos = vec![usize::MAX; gc.n_vertices()];
    for (k, &y) in layer.iter().enumerate() {
        pos[y] = k;
    }
    let mut parent: Vec<usize> = (0..layer.len()).collect();
    let (mut kept, mut removed, mut disagree) = (0usize, 0usize, 0usize);
    for (ky, &y) in layer.iter().enumerate() {
        for &z in gc.neighbors(y) {
            let kz = pos[z];
            if kz == usize::MAX || kz <= ky {
                continue;
            }
            let w = intersect(f, gc.vertex(y), gc.vertex(z));
            let ty = cover_type(geo, &w, gc.vertex(y));
            let tz = cover_type(geo, &w, gc.vertex(z));
            if ty != tz || ty == CoverType::NotCover {
                disagree += 1;
            }
            if ty == CoverType::Slash && tz == CoverType::Slash {
                removed += 1;
            } else {
                kept += 1;
                let (a, b) = (find(&mut parent, ky), find(&mut parent, kz));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for k in 0..layer.len() {
        let root = find(&mut parent, k);
        groups.entry(root).or_default().push(layer[k]);
    }
    let mut components: Vec<Vec<usize>> = groups.into_values().collect();
    components.sort_by_key(|c| c[0]);

    let d = gc.d();
    let mut checks = CheckList::new();
    checks.expect_eq(format!("γ_{i}: both endpoints cover y ∩ z with the same type"), 0, disagree);
    checks.expect_eq(
        format!("γ_{i}: number of components = [D, {i}]_q"),
        q_binomial(d as i64, i as i64, gc.q()),
        BigInt::from(components.len()),
    );
    let mut targets: Vec<Vec<usize>> = fam.of_dim(d - i).into_iter().map(|a| fam.g_sets[a].clone()).collect();
    targets.sort();
    let mut found = components.clone();
    found.sort();
    checks.expect(
        format!("γ_{i}: components are exactly G_α with dim α = D-{i}"),
        found == targets,
        "component sets differ from the G_α",
    );
    GammaComponents {
        i,
        edges_kept: kept,
        edges_removed: removed,
        components,
        checks,
    }
}

/// Whether the subgraph of `Γ` induced on `set` is connected.
pub fn induced_connected(gc: &GraphContext, set: &[usize]) -> bool {
    if set.is_empty() {
        return true;
    }
    let mut inside = vec![false; gc.n_vertices()];
    for &y in set {
        inside[y] = true;
    }
    let mut seen = vec![false; gc.n_vertices()];
    let mut queue = VecDeque::from([set[0]]);
    seen[set[0]] = true;
    let mut count = 1;
    while let Some(y) = queue.pop_front() {
        for &z in gc.neighbors(y) {
            if inside[z] && !seen[z] {
                seen[z] = true;
                count += 1;
                queue.push_back(z);
            }
        }
    }
    count == set.len()
}

/// Connectivity of `Γ_D(x)` and of every `G_α`, each as an induced subgraph of `Γ`.
pub fn connectivity_check(gc: &GraphContext, fam: &AlphaFamily) -> CheckList {
    let mut checks = CheckList::new();
    let far = gc.sphere(gc.d());
    checks.expect(
        format!("Γ_D(x) connected ({} vertices)", far.len()),
        induced_connected(gc, &far),
        "disconnected",
    );
    let bad: Vec<usize> = (0..fam.len()).filter(|&a| !induced_connected(gc, &fam.g_sets[a])).collect();
    checks.expect("every G_α connected", bad.is_empty(), format!("disconnected for α #{bad:?}"));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::{build_graph, GraphOptions};
    use crate::nucleus::alpha_family;

    #[test]
    fn union_find_compresses() {
        let mut parent = vec![0, 0, 1, 2];
        assert_eq!(find(&mut parent, 3), 0);
        assert!(parent[3] <= 1);
    }

    #[test]
    fn complete_graph_components() {
        let gc = build_graph(2, 4, 1, &GraphOptions::default()).unwrap();
        let fam = alpha_family(&gc);
        let g0 = gamma_components(&gc, &fam, 0);
        assert_eq!(g0.components, vec![vec![gc.x_vertex()]]);
        // in a complete graph every pair meets in 0, a \-cover of both ends
        let g1 = gamma_components(&gc, &fam, 1);
        assert!(g1.checks.all_passed(), "{:?}", g1.checks);
        assert_eq!((g1.count(), g1.edges_removed), (1, 0));
        assert_eq!(g1.sizes(), vec![14]);
        assert!(induced_connected(&gc, &[]));
    }
}
