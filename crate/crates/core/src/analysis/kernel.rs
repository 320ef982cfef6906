use std::collections::HashMap;

use crate::matrix::Matrix;
use crate::presentations::{enumerate_t_elements, GroupKind, Letter, TwinWord};
use crate::reps::MatrixRep;
use crate::ring::RatFunc;
use crate::{Error, Result};

/// Nonempty elements of `T_n` of length at most `maxlen` that act as the
/// identity, in enumeration order.
///
/// Prefixes of normal forms are normal forms, so each image is one product
/// away from an image computed on the previous length.
pub fn kernel_search(rep: &MatrixRep, maxlen: usize) -> Result<Vec<TwinWord>> {
    if rep.kind() != GroupKind::T {
        return Err(Error::KindMismatch(format!(
            "kernel search needs a T_n representation, got {}",
            rep.kind()
        )));
    }
    let mut cache: HashMap<Vec<Letter>, Matrix<RatFunc>> = HashMap::new();
    cache.insert(Vec::new(), Matrix::identity(rep.degree()));
    let mut kernel = Vec::new();
    let mut current_len = 0;
    for w in enumerate_t_elements(rep.n(), maxlen)? {
        let letters = w.letters();
        let Some((&last, prefix)) = letters.split_last() else {
            continue;
        };
        if letters.len() > current_len + 1 {
            // only the previous length is needed as prefixes
            cache.retain(|k, _| k.len() + 1 >= letters.len());
            current_len = letters.len() - 1;
        }
        let image = cache[prefix].mul(rep.image(last).expect("T_n generator"));
        if image.is_identity() {
            kernel.push(w.clone());
        }
        cache.insert(letters.to_vec(), image);
    }
    Ok(kernel)
}
