//! Direct, semidirect and regular wreath products.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{Permutation, MAX_DEGREE};

/// `A × B` acting on the disjoint union of the two point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup, cap: usize) -> Result<PermGroup> {
    let degree = a.degree() + b.degree();
    if degree > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange(degree));
    }
    let order = a.order().saturating_mul(b.order());
    if order > cap {
        return Err(Error::ElementCapExceeded { cap, partial: order });
    }
    let lift_a = |x: &Permutation| x.embed(0, degree);
    let lift_b = |y: &Permutation| y.embed(a.degree(), degree);
    let mut gens: Vec<Permutation> = a.generators().iter().map(lift_a).collect();
    gens.extend(b.generators().iter().map(lift_b));
    // a-part occupies the low points, so (x, y) order is lexicographic in (x, y)
    let mut elements = Vec::with_capacity(order);
    for x in a.elements() {
        for y in b.elements() {
            let mut images: Vec<u16> = x.images().to_vec();
            images.extend(y.images().iter().map(|&v| v + a.degree() as u16));
            elements.push(Permutation::from_raw(images.into_boxed_slice()));
        }
    }
    debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
    Ok(PermGroup::assemble(degree, gens, elements))
}

/// `A ⋊ Q` as a permutation group on the elements of `A` followed by the points of `Q`.
///
/// `action[i]` is the automorphism induced by `Q`'s `i`-th generator, written
/// as a permutation of `A`'s element indices. On the first `|A|` points the
/// element `(a, q)` acts by `x ↦ (x·a)^action(q)`; on the remaining `deg(Q)`
/// points it acts as `q`. The second block keeps the representation faithful
/// when the action has a kernel, so the order is always `|A|·|Q|`. The map is
/// checked to extend to a homomorphism `Q → Aut(A)`.
pub fn semidirect_product(
    a: &PermGroup,
    q: &PermGroup,
    action: &[Permutation],
    budget: usize,
) -> Result<PermGroup> {
    let n = a.order();
    if action.len() != q.generators().len() || action.iter().any(|x| x.degree() != n) {
        return Err(Error::NotHomomorphism);
    }
    let order = n.saturating_mul(q.order());
    if order > budget {
        return Err(Error::SizeGuardExceeded { order, budget });
    }
    let degree = n + q.degree();
    if degree > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange(degree));
    }
    let a_gens = a.generator_indices();
    for phi in action {
        for x in 0..n as u32 {
            for &y in &a_gens {
                let lhs = phi.image(a.mul_idx(x, y) as usize);
                let rhs = a.mul_idx(phi.image(x as usize) as u32, phi.image(y as usize) as u32);
                if lhs != rhs as usize {
                    return Err(Error::NotAutomorphism);
                }
            }
        }
    }
    check_action_homomorphism(q, action, n)?;

    let translations = a_gens.iter().map(|&y| {
        let mut images: Vec<u16> = (0..n as u32).map(|x| a.mul_idx(x, y) as u16).collect();
        images.extend((n..degree).map(|x| x as u16));
        Permutation::from_raw(images.into_boxed_slice())
    });
    let mut gens: Vec<Permutation> = translations.collect();
    for (phi, qg) in action.iter().zip(q.generators()) {
        let mut images: Vec<u16> = phi.images().to_vec();
        images.extend(qg.images().iter().map(|&x| x + n as u16));
        gens.push(Permutation::from_raw(images.into_boxed_slice()));
    }
    gens.retain(|g| !g.is_identity());
    if gens.is_empty() {
        return Ok(PermGroup::trivial(degree));
    }
    PermGroup::generate(&gens, budget)
}

/// Walks `Q`'s Cayley graph assigning `φ(x)`; any inconsistency means the
/// generator images do not extend to a homomorphism.
fn check_action_homomorphism(q: &PermGroup, action: &[Permutation], n: usize) -> Result<()> {
    let gens = q.generator_indices();
    let mut phi: FxHashMap<u32, Permutation> = FxHashMap::default();
    phi.insert(0, Permutation::identity(n));
    let mut queue = VecDeque::from([0u32]);
    while let Some(x) = queue.pop_front() {
        let px = phi[&x].clone();
        for (s, act) in gens.iter().zip(action) {
            let y = q.mul_idx(x, *s);
            let img = px.compose(act);
            match phi.get(&y) {
                Some(existing) if *existing != img => return Err(Error::NotHomomorphism),
                Some(_) => {}
                None => {
                    phi.insert(y, img);
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(())
}

/// Regular wreath product `A wr B`: the base `A^{|B|}` with `B` permuting the
/// coordinates by its right regular action. Degree `deg(A)·|B|`.
pub fn wreath_regular(a: &PermGroup, b: &PermGroup, cap: usize) -> Result<PermGroup> {
    let blocks = b.order();
    let da = a.degree();
    let degree = da.checked_mul(blocks).filter(|&d| d <= MAX_DEGREE);
    let degree = degree.ok_or(Error::DegreeOutOfRange(da.saturating_mul(blocks)))?;
    let order = (0..blocks)
        .try_fold(blocks, |acc, _| acc.checked_mul(a.order()))
        .filter(|&o| o <= cap);
    if order.is_none() {
        return Err(Error::ElementCapExceeded {
            cap,
            partial: cap.saturating_add(1),
        });
    }
    let mut gens: Vec<Permutation> = a
        .generators()
        .iter()
        .filter(|x| !x.is_identity())
        .map(|x| x.embed(0, degree))
        .collect();
    for s in b.generator_indices() {
        let mut images = vec![0u16; degree];
        for j in 0..blocks {
            let target = b.mul_idx(j as u32, s) as usize;
            for x in 0..da {
                images[j * da + x] = (target * da + x) as u16;
            }
        }
        let perm = Permutation::from_raw(images.into_boxed_slice());
        if !perm.is_identity() {
            gens.push(perm);
        }
    }
    if gens.is_empty() {
        return Ok(PermGroup::trivial(degree));
    }
    PermGroup::generate(&gens, cap)
}
