// Copyright 2026 The axincircle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON Lines instance format:
//
//   {"id":"E1","s1":SITE,"s2":SITE,"s3":SITE,"q":SITE}
//   SITE = {"t":"p","x":"0","y":"5"}
//        | {"t":"s","ax":"-7","ay":"0","bx":"7","by":"0"}
//
// Coordinates are decimal integer strings. Optional "config" (tag such as
// "PPSS") and "expected" (-1, 0 or 1) fields are read and written.

#ifndef AXINCIRCLE_INSTANCE_IO_HPP_
#define AXINCIRCLE_INSTANCE_IO_HPP_

#include <stdexcept>
#include <string>

#include "axincircle/geom.hpp"

namespace axincircle {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

InstanceRecord parse_instance(const std::string& line);
std::string format_instance(const InstanceRecord& rec);

}  // namespace axincircle

#endif  // AXINCIRCLE_INSTANCE_IO_HPP_
