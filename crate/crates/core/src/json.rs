//! Serde helpers: complex scalars serialize as `[re, im]` arrays.

use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

pub fn serialize_complex<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(2))?;
    seq.serialize_element(&z.re)?;
    seq.serialize_element(&z.im)?;
    seq.end()
}

pub fn serialize_complex_vec<S: Serializer>(v: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for z in v {
        seq.serialize_element(&[z.re, z.im])?;
    }
    seq.end()
}

/// A complex scalar wrapper whose JSON form is `[re, im]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CJson(pub Complex64);

impl Serialize for CJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_complex(&self.0, s)
    }
}

impl<'de> serde::Deserialize<'de> for CJson {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [re, im]: [f64; 2] = serde::Deserialize::deserialize(d)?;
        Ok(CJson(Complex64::new(re, im)))
    }
}
