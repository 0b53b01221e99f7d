//! Homomorphisms, quotients by normal subgroups, and sections `H/K` as standalone groups.
//!
//! Cosets are always right cosets `Kx`, and groups act on them by right
//! multiplication.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A homomorphism given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: PermGroup,
    target: PermGroup,
    generator_images: Vec<Permutation>,
    // source element index -> target element index
    table: Vec<u32>,
}

impl GroupHom {
    /// Checks every edge of the source Cayley graph, so a consistent
    /// assignment is exactly a well-defined homomorphism.
    pub fn new(
        source: PermGroup,
        target: PermGroup,
        generator_images: Vec<Permutation>,
    ) -> Result<GroupHom> {
        if generator_images.len() != source.generators().len() {
            return Err(Error::NotHomomorphism);
        }
        if generator_images.iter().any(|x| !target.contains(x)) {
            return Err(Error::NotHomomorphism);
        }
        let gen_src = source.generator_indices();
        let gen_tgt: Vec<u32> = generator_images.iter().map(|x| target.idx(x)).collect();
        let mut table = vec![u32::MAX; source.order()];
        table[0] = 0;
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            for (s, t) in gen_src.iter().zip(&gen_tgt) {
                let y = source.mul_idx(x, *s) as usize;
                let img = target.mul_idx(table[x as usize], *t);
                if table[y] == u32::MAX {
                    table[y] = img;
                    queue.push_back(y as u32);
                } else if table[y] != img {
                    return Err(Error::NotHomomorphism);
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            generator_images,
            table,
        })
    }

    pub(crate) fn identity(g: &PermGroup) -> GroupHom {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            generator_images: g.generators().to_vec(),
            table: (0..g.order() as u32).collect(),
        }
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.generator_images
    }

    pub fn apply(&self, x: &Permutation) -> Option<&Permutation> {
        let i = self.source.index_of(x)?;
        Some(self.target.element(self.table[i] as usize))
    }

    pub fn kernel(&self) -> PermGroup {
        let elements: Vec<Permutation> = self
            .table
            .iter()
            .enumerate()
            .filter(|(_, &t)| t == 0)
            .map(|(i, _)| self.source.element(i).clone())
            .collect();
        PermGroup::from_sorted_elements(self.source.degree(), elements)
    }

    /// Image of a subgroup of the source.
    pub fn image_of(&self, sub: &PermGroup) -> PermGroup {
        let gens: Vec<Permutation> = sub
            .generators()
            .iter()
            .map(|g| self.apply(g).expect("subgroup of source").clone())
            .collect();
        self.target.subgroup(&gens)
    }

    /// Full preimage of a subgroup of the target.
    pub fn preimage(&self, sub: &PermGroup) -> PermGroup {
        let elements: Vec<Permutation> = self
            .table
            .iter()
            .enumerate()
            .filter(|(_, &t)| sub.contains(self.target.element(t as usize)))
            .map(|(i, _)| self.source.element(i).clone())
            .collect();
        PermGroup::from_sorted_elements(self.source.degree(), elements)
    }
}

/// Right cosets of `sub` in `group`: coset id per element index, plus representatives.
struct Cosets {
    coset_of: Vec<u32>,
    reps: Vec<u32>,
}

fn right_cosets(group: &PermGroup, sub: &PermGroup) -> Cosets {
    let mut coset_of = vec![u32::MAX; group.order()];
    let mut reps = Vec::new();
    let sub_idx: Vec<u32> = sub.elements().iter().map(|x| group.idx(x)).collect();
    for x in 0..group.order() {
        if coset_of[x] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x as u32);
        for &n in &sub_idx {
            coset_of[group.mul_idx(n, x as u32) as usize] = c;
        }
    }
    Cosets { coset_of, reps }
}

fn coset_permutation(group: &PermGroup, cosets: &Cosets, x: u32) -> Permutation {
    let images: Box<[u16]> = cosets
        .reps
        .iter()
        .map(|&r| cosets.coset_of[group.mul_idx(r, x) as usize] as u16)
        .collect();
    Permutation::from_raw(images)
}

/// `G/N` realized as the action of `G` on the right cosets of `N`, with the projection.
///
/// The image has degree `[G:N]`; for `N = 1` the group itself is returned with
/// the identity map, and for `N = G` the trivial group on one point.
pub fn quotient(g: &PermGroup, n: &PermGroup) -> Result<(PermGroup, GroupHom)> {
    if !n.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    if !n.is_normal_in(g) {
        return Err(Error::NotNormal);
    }
    if n.is_trivial() {
        return Ok((g.clone(), GroupHom::identity(g)));
    }
    if n.order() == g.order() {
        let q = PermGroup::trivial(1);
        let images = vec![q.identity().clone(); g.generators().len()];
        let hom = GroupHom::new(g.clone(), q.clone(), images)?;
        return Ok((q, hom));
    }
    let cosets = right_cosets(g, n);
    let images: Vec<Permutation> = g
        .generator_indices()
        .into_iter()
        .map(|s| coset_permutation(g, &cosets, s))
        .collect();
    let q = PermGroup::generate(&images, usize::MAX)?;
    debug_assert_eq!(q.order() * n.order(), g.order());
    let hom = GroupHom::new(g.clone(), q.clone(), images)?;
    Ok((q, hom))
}

/// Coset data attached to a materialized section `H/K`.
#[derive(Clone, Debug)]
pub struct CosetLabelling {
    /// `reps[c]` is an element of `H` with coset `c = K·reps[c]`.
    pub reps: Vec<Permutation>,
    /// Coset index of each element of the section group, in element order.
    pub element_coset: Vec<usize>,
}

/// A section `H/K` materialized as a group `A`, able to translate conjugation
/// by ambient elements into permutations of `A`'s element list.
pub(crate) struct SectionGroup {
    pub group: PermGroup,
    top: PermGroup,
    // None when K = 1 and A is H itself
    cosets: Option<(Cosets, Vec<u32>)>,
}

impl SectionGroup {
    /// `allow_identity` lets `K = 1` reuse `H` instead of its regular representation.
    pub fn new(h: &PermGroup, k: &PermGroup, allow_identity: bool) -> Result<SectionGroup> {
        if !k.is_normal_in(h) {
            return Err(Error::NotNormal);
        }
        if allow_identity && k.is_trivial() {
            return Ok(SectionGroup {
                group: h.clone(),
                top: h.clone(),
                cosets: None,
            });
        }
        let cosets = right_cosets(h, k);
        let images: Vec<Permutation> = h
            .generator_indices()
            .into_iter()
            .map(|s| coset_permutation(h, &cosets, s))
            .collect();
        let group = PermGroup::generate(&images, usize::MAX)?;
        // the action is regular, so an element is determined by where it sends coset 0
        let mut coset_element = vec![0u32; cosets.reps.len()];
        for (i, a) in group.elements().iter().enumerate() {
            coset_element[a.image(0)] = i as u32;
        }
        Ok(SectionGroup {
            group,
            top: h.clone(),
            cosets: Some((cosets, coset_element)),
        })
    }

    pub fn labelling(&self) -> CosetLabelling {
        match &self.cosets {
            None => CosetLabelling {
                reps: self.group.elements().to_vec(),
                element_coset: (0..self.group.order()).collect(),
            },
            Some((cosets, _)) => CosetLabelling {
                reps: cosets
                    .reps
                    .iter()
                    .map(|&r| self.top.element(r as usize).clone())
                    .collect(),
                element_coset: self.group.elements().iter().map(|a| a.image(0)).collect(),
            },
        }
    }

    /// Conjugation by `g` (which must normalize `H` and `K`) as a permutation
    /// of the section group's element indices.
    pub fn conjugation_action(&self, g: &Permutation) -> Permutation {
        let images: Box<[u16]> = match &self.cosets {
            None => self
                .group
                .elements()
                .iter()
                .map(|a| self.group.idx(&a.conjugate_by(g)) as u16)
                .collect(),
            Some((cosets, coset_element)) => self
                .group
                .elements()
                .iter()
                .map(|a| {
                    let rep = self.top.element(cosets.reps[a.image(0)] as usize);
                    let c = cosets.coset_of[self.top.idx(&rep.conjugate_by(g)) as usize];
                    coset_element[c as usize] as u16
                })
                .collect(),
        };
        Permutation::from_raw(images)
    }
}

/// The section `H/K` of `G` as the action of `H` on the right cosets of `K`
/// (degree `[H:K]`), with the coset labelling used to express conjugation by
/// elements of `G`.
pub fn section_as_group(
    g: &PermGroup,
    h: &PermGroup,
    k: &PermGroup,
) -> Result<(PermGroup, CosetLabelling)> {
    if !h.is_subgroup_of(g) || !k.is_subgroup_of(h) {
        return Err(Error::NotSubgroup);
    }
    if h.order() == k.order() {
        let t = PermGroup::trivial(1);
        let labelling = CosetLabelling {
            reps: vec![h.identity().clone()],
            element_coset: vec![0],
        };
        return Ok((t, labelling));
    }
    let s = SectionGroup::new(h, k, false)?;
    let labelling = s.labelling();
    Ok((s.group, labelling))
}
