#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(dfa) = kal_core::parse_dfa(text) {
        let printed = dfa.to_string();
        let again = kal_core::parse_dfa(&printed).expect("printed DFA reparses");
        assert_eq!(again, dfa);
        let min = dfa.minimize();
        assert!(min.state_count() <= dfa.state_count());
        assert!(min.equivalent(&dfa).unwrap());
    }
});
