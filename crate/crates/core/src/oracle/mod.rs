//! Exhaustive search for generalized-cospectral mates and rational
//! orthogonal certificates relating them.

mod certificate;
mod verify;

use std::collections::HashMap;

use thiserror::Error;

use crate::alpha::{spectrum_key, AlphaParam, SpectrumKey};
use crate::graph::{canonical_form, Graph, GraphError, CANON_MAX_ORDER};
use crate::par::{self, Execution};

pub use certificate::{build_u, level, OrthogonalCertificate};
pub use verify::{
    verify_theorem, CertificateRecord, ClassRecord, MemberRecord, VerificationReport, VerifyOptions,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graphs of different orders in one batch ({0} and {1})")]
    MixedOrders(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("generalized spectra differ")]
    KeysDiffer,
    #[error("walk matrix of {0} is singular")]
    SingularWalkMatrix(String),
    #[error("certificate check failed: {0}")]
    VerificationFailed(String),
}

/// Non-isomorphic graphs sharing one generalized spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MateClass {
    pub key: SpectrumKey,
    pub members: Vec<Graph>,
}

impl MateClass {
    pub fn is_singleton(&self) -> bool {
        self.members.len() == 1
    }
}

pub(crate) fn check_orders(graphs: &[Graph]) -> Result<(), OracleError> {
    if let Some(first) = graphs.first() {
        let n = first.order();
        if let Some(g) = graphs.iter().find(|g| g.order() != n) {
            return Err(OracleError::MixedOrders(n, g.order()));
        }
        if n > CANON_MAX_ORDER {
            return Err(GraphError::OrderTooLarge {
                n,
                max: CANON_MAX_ORDER,
            }
            .into());
        }
    }
    Ok(())
}

/// Groups indices by equal keys, dropping later members isomorphic to an
/// earlier one. Groups appear in order of first occurrence.
pub(crate) fn group_indices<K: Eq + std::hash::Hash + Clone>(
    keys: &[K],
    forms: &[Vec<u8>],
) -> Vec<Vec<usize>> {
    let mut slot: HashMap<K, usize> = HashMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, k) in keys.iter().enumerate() {
        let s = *slot.entry(k.clone()).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        if !groups[s].iter().any(|&j| forms[j] == forms[i]) {
            groups[s].push(i);
        }
    }
    groups
}

/// Partitions `graphs` into generalized-cospectral classes, one
/// representative per isomorphism class. Every input graph's isomorphism
/// class appears in exactly one returned class.
pub fn find_mate_classes(
    graphs: &[Graph],
    alpha: AlphaParam,
    exec: Execution,
) -> Result<Vec<MateClass>, OracleError> {
    check_orders(graphs)?;
    let data = par::map(graphs, exec, |g| {
        (
            spectrum_key(g, alpha),
            canonical_form(g).expect("order checked"),
        )
    });
    let (keys, forms): (Vec<_>, Vec<_>) = data.into_iter().unzip();
    Ok(group_indices(&keys, &forms)
        .into_iter()
        .map(|idx| MateClass {
            key: keys[idx[0]].clone(),
            members: idx.iter().map(|&i| graphs[i].clone()).collect(),
        })
        .collect())
}
