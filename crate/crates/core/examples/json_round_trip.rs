//! Canonical JSON for every object kind.

use zinbiel::coalgebra::dualize;
use zinbiel::matched_pair::MatchedPairData;
use zinbiel::models::{trunc_integration, Orientation};
use zinbiel::{BialgebraCandidate, Bimodule, Object};

fn main() -> zinbiel::Result<()> {
    let t2 = trunc_integration(2, Orientation::Right);
    let objects = [
        Object::Algebra(t2.clone()),
        Object::Coalgebra(dualize(&t2)),
        Object::Bimodule(Bimodule::regular(&t2)),
        Object::MatchedPair(MatchedPairData::from_bimodule(&Bimodule::regular(&t2))),
        Object::Bialgebra(BialgebraCandidate::new(t2.clone(), t2.opposite())?),
    ];
    for o in &objects {
        let text = o.to_canonical_string();
        let back = Object::parse(&text)?;
        println!("{:<20} {} bytes, round trip exact: {}", o.kind(), text.len(), back.to_canonical_string() == text);
    }
    print!("{}", objects[0].to_canonical_string());
    Ok(())
}
