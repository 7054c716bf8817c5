// Copyright 2026 The dagcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DAGCOUNT_BIGINT_HPP_
#define DAGCOUNT_BIGINT_HPP_

#include <gmpxx.h>

namespace dagcount {

using BigInt = mpz_class;
using Rational = mpq_class;

// Nonnegative by convention; every tally in the library is one of these.
using BigCount = mpz_class;

}  // namespace dagcount

#endif  // DAGCOUNT_BIGINT_HPP_
