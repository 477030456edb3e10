#![no_main]

use libfuzzer_sys::fuzz_target;
use orientalis::polygraph::Polygraph;
use orientalis::verify::verify_polygraph;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(s) = Polygraph::from_json(text) {
        assert_eq!(Polygraph::from_json(&s.to_json()).unwrap(), s);
        if s.len() <= 64 {
            let _ = verify_polygraph(&s, None);
        }
    }
});
