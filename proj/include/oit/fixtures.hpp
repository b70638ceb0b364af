#pragma once

#include "oit/information.hpp"

namespace oit::fixtures {

/// Reference instance shipped as fixtures/ex1.json.
///
///   states       s1 {a}   t1 "v1"     reflections  r1 {m1} t4 "v1"
///                s2 {b}   t2 "v2"                  r2 {m2} t5 "v2"
///                s3 {a,b} t3 "v3"                  r3 {m3} t4 "v1"
///   links        (s1,r1) (s1,r3) (s2,r2) (s3,r2)
///
/// s1 is replicated onto m1 and m3; s2 and s3 are merged into r2.
Information ex1();

/// Relays `info`'s reflections one-to-one onto fresh media at the same ticks
/// (medium `prefix` + running index starting at `first_index`), keeping
/// values. Composing with it leaves every state-side metric unchanged.
Information identity_relay(const Information& info, const std::string& prefix = "m", int first_index = 4,
                           Tick added_delay = 0);

}  // namespace oit::fixtures
