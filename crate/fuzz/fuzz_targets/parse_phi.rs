#![no_main]

use libfuzzer_sys::fuzz_target;
use orientalis::oriental::{cosimplicial_map, MonotoneMap};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(phi) = MonotoneMap::parse(text, None) {
        let text: Vec<String> = phi.values().iter().map(u16::to_string).collect();
        assert_eq!(MonotoneMap::parse(&text.join(","), Some(phi.cod())).unwrap(), phi);
        if phi.dom() <= 4 && phi.cod() <= 4 {
            cosimplicial_map(&phi).unwrap();
        }
    }
});
