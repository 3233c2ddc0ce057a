//! Subgroups, conjugacy classes and centralizers.

use alloc::vec;
use alloc::vec::Vec;

use super::FiniteGroup;
use crate::error::{domain, Result};

/// A subgroup with its own multiplication table.
///
/// Element `i` of [`Subgroup::group`] is `elements()[i]` of the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    parent: FiniteGroup,
    elements: Vec<usize>,
    position: Vec<Option<u32>>,
    group: FiniteGroup,
}

impl Subgroup {
    /// Build from an explicit element list, checking closure.
    pub fn from_elements(parent: &FiniteGroup, elements: &[usize]) -> Result<Subgroup> {
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        for &x in &elements {
            parent.check_element(x)?;
        }
        let mut position = vec![None; parent.order()];
        for (i, &x) in elements.iter().enumerate() {
            position[x] = Some(i as u32);
        }
        if position[parent.identity()].is_none() {
            return Err(domain!("subgroup must contain the identity"));
        }
        let k = elements.len();
        let mut mult = Vec::with_capacity(k * k);
        for &a in &elements {
            if position[parent.inv(a)].is_none() {
                return Err(domain!("element list is not closed under inverses"));
            }
            for &b in &elements {
                let c = position[parent.mul(a, b)]
                    .ok_or_else(|| domain!("element list is not closed under multiplication"))?;
                mult.push(c);
            }
        }
        let group = FiniteGroup::from_flat(k, mult, None)?;
        Ok(Subgroup {
            parent: parent.clone(),
            elements,
            position,
            group,
        })
    }

    /// The subgroup generated by `gens`.
    pub fn generated_by(parent: &FiniteGroup, gens: &[usize]) -> Result<Subgroup> {
        for &g in gens {
            parent.check_element(g)?;
        }
        let mut inside = vec![false; parent.order()];
        let mut list = vec![parent.identity()];
        inside[parent.identity()] = true;
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            for &g in gens {
                let y = parent.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    list.push(y);
                }
            }
            head += 1;
        }
        Subgroup::from_elements(parent, &list)
    }

    pub fn whole(parent: &FiniteGroup) -> Subgroup {
        let all: Vec<usize> = (0..parent.order()).collect();
        Subgroup::from_elements(parent, &all).expect("the whole group is a subgroup")
    }

    pub fn trivial(parent: &FiniteGroup) -> Subgroup {
        Subgroup::from_elements(parent, &[parent.identity()]).expect("identity is a subgroup")
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    /// The induced group on `0..len`.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Sorted parent indices; doubles as the embedding map.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn embed(&self, i: usize) -> usize {
        self.elements[i]
    }

    /// Subgroup index of a parent element, if it lies in the subgroup.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.position.get(x).copied().flatten().map(|i| i as usize)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.position(x).is_some()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_normal(&self) -> bool {
        let p = &self.parent;
        (0..p.order()).all(|g| self.elements.iter().all(|&x| self.contains(p.conj(g, x))))
    }
}

/// Conjugacy classes, each listed in increasing index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    pub classes: Vec<Vec<usize>>,
    /// Smallest element of each class; classes are ordered by representative.
    pub representatives: Vec<usize>,
    pub class_of: Vec<usize>,
}

impl ConjugacyData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ConjugacyData {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    let mut representatives = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members: Vec<usize> = (0..n).map(|h| g.conj(h, x)).collect();
        members.sort_unstable();
        members.dedup();
        for &y in &members {
            class_of[y] = id;
        }
        representatives.push(x);
        classes.push(members);
    }
    ConjugacyData {
        classes,
        representatives,
        class_of,
    }
}

/// `C(g) = {x : xg = gx}`.
pub fn centralizer(group: &FiniteGroup, g: usize) -> Result<Subgroup> {
    group.check_element(g)?;
    let elems: Vec<usize> = (0..group.order()).filter(|&x| group.commute(x, g)).collect();
    Subgroup::from_elements(group, &elems)
}
