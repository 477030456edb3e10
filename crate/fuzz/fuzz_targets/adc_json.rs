#![no_main]

use libfuzzer_sys::fuzz_target;
use orientalis::steiner::{strong_loop_free_check, unital_check, validate_adc, AugDirComplex};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(k) = AugDirComplex::from_json(text) {
        assert!(AugDirComplex::from_json(&k.to_json()).unwrap() == k);
        let _ = validate_adc(&k);
        let _ = unital_check(&k);
        let _ = strong_loop_free_check(&k);
    }
});
