// Copyright 2026 The bioadv Authors.
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

// Generated copy of data/qwerty.layout; tests check they match.

#pragma once

#include <string_view>

namespace bioadv::embedded {

inline constexpr std::string_view kQwertyLayout = R"layout(# US QWERTY adjacency: same-row neighbours plus staggered contacts with the
# rows above and below (digit row included). One `key:neighbours` per line.
1:2q
2:13qw
3:24we
4:35er
5:46rt
6:57ty
7:68yu
8:79ui
9:80io
0:9op
q:12wa
w:23qeas
e:34wrsd
r:45etdf
t:56ryfg
y:67tugh
u:78yihj
i:89uojk
o:90ipkl
p:0ol
a:qwsz
s:weadzx
d:ersfxc
f:rtdgcv
g:tyfhvb
h:yugjbn
j:uihknm
k:iojlm
l:opk
z:asx
x:sdzc
c:dfxv
v:fgcb
b:ghvn
n:hjbm
m:jkn
)layout";

}  // namespace bioadv::embedded
