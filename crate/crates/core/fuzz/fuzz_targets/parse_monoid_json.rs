#![no_main]

use kal_core::monoid::{green_summary, monoid_to_json, parse_monoid_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(doc) = parse_monoid_json(text) {
        if doc.monoid.size() <= 64 {
            green_summary(&doc.monoid);
        }
        let out = monoid_to_json(&doc.monoid, doc.hom.as_ref(), doc.accept.as_deref());
        let again = parse_monoid_json(&out.to_string()).expect("emitted monoid reparses");
        assert_eq!(again.monoid, doc.monoid);
    }
});
