//! Complex numbers as `[re, im]` pairs.

use crate::specfun::CNum;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub fn serialize<S: Serializer>(z: &CNum, s: S) -> Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<CNum, D::Error> {
    let [re, im] = <[f64; 2]>::deserialize(d)?;
    Ok(CNum::new(re, im))
}
