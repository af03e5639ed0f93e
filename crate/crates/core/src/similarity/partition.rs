use serde::{Deserialize, Serialize};

use super::sim_objects;
use crate::semnet::SemanticNet;

pub const DEFAULT_THETA: f64 = 0.9;

/// Disjoint groups of mutually reachable similar objects.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Partition {
    pub threshold: f64,
    pub groups: Vec<Vec<String>>,
}

impl Partition {
    pub fn group_of(&self, object: &str) -> Option<usize> {
        self.groups
            .iter()
            .position(|g| g.iter().any(|o| o == object))
    }
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Single-link grouping: objects are connected when their similarity is at
/// least `theta`. Pairs that cannot be compared are never connected.
///
/// Members are sorted, and groups are ordered by their smallest member.
pub fn partition(net: &SemanticNet, theta: f64) -> Partition {
    let objects: Vec<_> = net.objects.values().collect();
    let mut parent: Vec<usize> = (0..objects.len()).collect();
    for i in 0..objects.len() {
        for j in (i + 1)..objects.len() {
            if matches!(sim_objects(objects[i], objects[j]), Ok(s) if s >= theta) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut groups: Vec<Vec<String>> = Vec::new();
    let mut slot = vec![usize::MAX; objects.len()];
    // objects are already in id order, so the first member seen fixes the
    // group order
    for (i, object) in objects.iter().enumerate() {
        let root = find(&mut parent, i);
        if slot[root] == usize::MAX {
            slot[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[root]].push(object.name.clone());
    }
    Partition {
        threshold: theta,
        groups,
    }
}
