//! Exhaustive subgroup enumeration for small groups.

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::structure::simple::prime_power;

struct Sub {
    bits: FixedBitSet,
    members: Vec<u32>,
    gens: Vec<u32>,
}

/// Every subgroup of `g`, sorted by order and then by element list.
///
/// Starts from the cyclic subgroups and repeatedly adjoins cyclic subgroups of
/// prime-power order until no new subgroup appears. Each subgroup is generated
/// by its elements of prime-power order, so the fixpoint is the whole lattice.
pub fn all_subgroups(g: &PermGroup, budget: usize) -> Result<Vec<PermGroup>> {
    if g.order() > budget {
        return Err(Error::SubgroupBudgetExceeded {
            order: g.order(),
            budget,
        });
    }
    if let Some(cached) = g.subgroups_cache().get() {
        return Ok(cached.clone());
    }
    let subs = enumerate(g);
    Ok(g.subgroups_cache().get_or_init(|| subs).clone())
}

fn cyclic(g: &PermGroup, x: u32) -> Sub {
    let n = g.order();
    let mut bits = FixedBitSet::with_capacity(n);
    bits.insert(0);
    let mut members = vec![0u32];
    let mut y = x;
    while y != 0 {
        bits.insert(y as usize);
        members.push(y);
        y = g.mul_idx(y, x);
    }
    let gens = if x == 0 { Vec::new() } else { vec![x] };
    Sub { bits, members, gens }
}

fn enumerate(g: &PermGroup) -> Vec<PermGroup> {
    g.prepare_table();
    let n = g.order();
    let mut seen: FxHashSet<FixedBitSet> = FxHashSet::default();
    let mut all: Vec<Sub> = Vec::new();
    let mut pp_gens: Vec<u32> = Vec::new();
    let mut pp_seen: FxHashSet<FixedBitSet> = FxHashSet::default();
    for x in 0..n as u32 {
        let c = cyclic(g, x);
        if x != 0 && prime_power(c.members.len()).is_some() && pp_seen.insert(c.bits.clone()) {
            pp_gens.push(x);
        }
        if seen.insert(c.bits.clone()) {
            all.push(c);
        }
    }
    let mut frontier: Vec<usize> = (0..all.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for i in frontier {
            for &x in &pp_gens {
                if all[i].bits.contains(x as usize) {
                    continue;
                }
                let mut bits = all[i].bits.clone();
                let mut members = all[i].members.clone();
                let mut gens = all[i].gens.clone();
                gens.push(x);
                g.close_bits(&mut bits, &mut members, &gens);
                if seen.contains(&bits) {
                    continue;
                }
                seen.insert(bits.clone());
                next.push(all.len());
                all.push(Sub {
                    bits,
                    members,
                    gens,
                });
            }
        }
        frontier = next;
    }
    all.sort_by(|a, b| {
        a.members
            .len()
            .cmp(&b.members.len())
            .then_with(|| a.bits.ones().cmp(b.bits.ones()))
    });
    all.iter()
        .map(|s| {
            if s.members.len() == n {
                g.clone()
            } else {
                g.subgroup_from_bits(&s.bits, &s.gens)
            }
        })
        .collect()
}
