//! Circularity, redundancy, and regularity of arguments.
//!
//! Both defects are witnessed by a pair of distinct sub-arguments sharing a
//! conclusion: nested pairs make the argument circular, incomparable pairs
//! make it redundant, and an argument with no such pair at all is regular.

use std::collections::BTreeSet;

use crate::argument::Argument;

/// The classification of one argument, with every witnessing pair.
///
/// A circular witness `(inner, outer)` satisfies `inner != outer`, equal
/// conclusions, and `inner` a sub-argument of `outer`. A redundant witness
/// is a same-conclusion pair where neither contains the other. `regular`
/// holds exactly when both witness lists are empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub circular: bool,
    pub redundant: bool,
    pub regular: bool,
    pub circular_witnesses: Vec<(Argument, Argument)>,
    pub redundant_witnesses: Vec<(Argument, Argument)>,
}

/// Examines every unordered pair of distinct sub-arguments. Witness pairs
/// come out sorted by canonical form, smaller element first.
pub fn classify(arg: &Argument) -> ClassificationReport {
    let subs: Vec<Argument> = arg.subarguments().into_iter().collect();
    let sub_sets: Vec<BTreeSet<Argument>> = subs.iter().map(Argument::subarguments).collect();

    let mut circular_witnesses = Vec::new();
    let mut redundant_witnesses = Vec::new();
    for i in 0..subs.len() {
        for j in i + 1..subs.len() {
            if subs[i].conclusion() != subs[j].conclusion() {
                continue;
            }
            // subs is sorted by size, so only subs[i] can sit inside subs[j];
            // a proper sub-argument always has strictly fewer nodes.
            if sub_sets[j].contains(&subs[i]) {
                circular_witnesses.push((subs[i].clone(), subs[j].clone()));
            } else {
                redundant_witnesses.push((subs[i].clone(), subs[j].clone()));
            }
        }
    }

    ClassificationReport {
        circular: !circular_witnesses.is_empty(),
        redundant: !redundant_witnesses.is_empty(),
        regular: circular_witnesses.is_empty() && redundant_witnesses.is_empty(),
        circular_witnesses,
        redundant_witnesses,
    }
}

/// Fast regularity test: all sub-argument conclusions are pairwise distinct.
pub fn is_regular(arg: &Argument) -> bool {
    let subs = arg.subarguments();
    let conclusions: BTreeSet<_> = subs.iter().map(|s| s.conclusion().clone()).collect();
    conclusions.len() == subs.len()
}
