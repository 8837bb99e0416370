//! Serde adapters for the `[re, im]` pair encoding used by every JSON
//! interface of this crate.

use num_complex::Complex64;

/// Complex value as a `[re, im]` pair.
pub fn to_pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// Complex value from a `[re, im]` pair.
pub fn from_pair(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

/// `#[serde(with = "wire::complex_pair")]` for a single complex field.
pub mod complex_pair {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        to_pair(*z).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        Ok(from_pair(<[f64; 2]>::deserialize(d)?))
    }
}

/// `#[serde(with = "wire::complex_pairs")]` for `Vec<Complex64>` fields.
pub mod complex_pairs {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(zs: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
        zs.iter().map(|&z| to_pair(z)).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex64>, D::Error> {
        Ok(Vec::<[f64; 2]>::deserialize(d)?.into_iter().map(from_pair).collect())
    }
}
