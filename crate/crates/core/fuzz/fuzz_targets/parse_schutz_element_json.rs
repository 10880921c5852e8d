#![no_main]

use kal_core::monoid::FiniteMonoid;
use kal_core::schutz::{parse_schutz_element_json, schutz_element_to_json, SchutzProduct};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let product = SchutzProduct::new(
        FiniteMonoid::cyclic_group(2).unwrap(),
        FiniteMonoid::cyclic_group(3).unwrap(),
    );
    if let Ok(e) = parse_schutz_element_json(text, &product) {
        let out = schutz_element_to_json(&e, &product);
        let again = parse_schutz_element_json(&out.to_string(), &product)
            .expect("emitted element reparses");
        assert_eq!(again, e);
        let id = product.identity();
        assert_eq!(product.mul(&id, &e), e);
    }
});
