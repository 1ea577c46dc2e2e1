#include "drsop/fixtures.hpp"

namespace drsop::fixtures {

namespace {

constexpr std::string_view kPaperInstance = R"fx(# D-RSOP experiment dataset: 8 measured nodes, 60 services, 4 resource kinds.
# Node and service rows list levels in the order of the resources header.
resources cpu memory network io

node A 100 50 100 70
node B 70 40 70 50
node C 50 80 70 50
node D 60 60 50 80
node E 50 90 80 40
node F 60 100 50 60
node G 80 50 50 40
node H 80 80 80 90

# SYNTHETIC nodes: I-L are not part of the measured node set; they clone
# E-H so that the Test IV / Test V ladders have 10 and 12 usable nodes.
node I 50 90 80 40
node J 60 100 50 60
node K 80 50 50 40
node L 80 80 80 90

service 01 A 4 1 10 4 2
service 02 C 5 1 6 5 2
service 03 G 4 5 2 5 6
service 04 A 17 10 17 1 2
service 05 D 10 14 10 1 1
service 06 C 3 3 12 3 8
service 07 C 6 15 2 18 3
service 08 F 6 1 4 8 4
service 09 D 4 4 3 17 10
service 10 D 4 8 19 19 8
service 11 B 8 5 9 18 4
service 12 I 6 16 14 3 2
service 13 G 4 6 5 17 11
service 14 E 5 18 11 13 4
service 15 F 1 10 9 12 8
service 16 A 9 12 17 14 1
service 17 D 5 3 6 8 6
service 18 B 5 8 12 3 11
service 19 C 7 15 12 8 9
service 20 G 1 4 8 6 12
service 21 F 7 12 10 5 1
service 22 G 2 3 16 16 2
service 23 H 5 6 19 1 4
service 24 D 3 16 11 2 3
service 25 F 4 14 8 15 9
service 26 G 10 4 15 7 8
service 27 B 2 20 19 5 2
service 28 B 8 16 2 3 5
service 29 G 6 16 10 3 1
service 30 F 5 1 1 3 10
service 31 J 4 19 18 1 8
service 32 H 10 6 14 3 7
service 33 I 2 3 10 3 2
service 34 E 4 2 8 1 8
service 35 E 9 8 9 9 5
service 36 F 4 8 15 13 1
service 37 G 2 12 8 5 3
service 38 E 2 16 11 1 2
service 39 D 8 13 8 6 4
service 40 G 3 6 9 10 1
service 41 I 6 14 1 11 8
service 42 H 7 8 3 10 3
service 43 F 9 9 9 10 9
service 44 A 8 11 8 12 11
service 45 C 2 5 5 7 18
service 46 G 6 2 7 3 2
service 47 J 5 4 3 10 16
service 48 H 8 5 2 14 8
service 49 B 2 6 7 1 1
service 50 I 1 1 9 6 13
service 51 G 4 4 11 9 6
service 52 L 3 7 2 7 5
service 53 E 12 6 6 10 12
service 54 J 10 3 9 8 10
service 55 K 8 5 5 4 8
service 56 H 7 6 3 5 7
service 57 A 3 8 12 2 6
service 58 F 1 12 17 1 9
service 59 F 6 10 8 6 14
service 60 C 5 9 2 3 8
)fx";

constexpr std::string_view kPaperTablesInstance = R"fx(# D-RSOP experiment dataset, measured rows only: nodes A-H, 60 services.
# Services 12, 31, 33, 41, 47, 50, 52, 54 and 55 reference initial nodes
# I-L which this document does not define; they are homeless-eligible.
resources cpu memory network io

node A 100 50 100 70
node B 70 40 70 50
node C 50 80 70 50
node D 60 60 50 80
node E 50 90 80 40
node F 60 100 50 60
node G 80 50 50 40
node H 80 80 80 90

service 01 A 4 1 10 4 2
service 02 C 5 1 6 5 2
service 03 G 4 5 2 5 6
service 04 A 17 10 17 1 2
service 05 D 10 14 10 1 1
service 06 C 3 3 12 3 8
service 07 C 6 15 2 18 3
service 08 F 6 1 4 8 4
service 09 D 4 4 3 17 10
service 10 D 4 8 19 19 8
service 11 B 8 5 9 18 4
service 12 I 6 16 14 3 2
service 13 G 4 6 5 17 11
service 14 E 5 18 11 13 4
service 15 F 1 10 9 12 8
service 16 A 9 12 17 14 1
service 17 D 5 3 6 8 6
service 18 B 5 8 12 3 11
service 19 C 7 15 12 8 9
service 20 G 1 4 8 6 12
service 21 F 7 12 10 5 1
service 22 G 2 3 16 16 2
service 23 H 5 6 19 1 4
service 24 D 3 16 11 2 3
service 25 F 4 14 8 15 9
service 26 G 10 4 15 7 8
service 27 B 2 20 19 5 2
service 28 B 8 16 2 3 5
service 29 G 6 16 10 3 1
service 30 F 5 1 1 3 10
service 31 J 4 19 18 1 8
service 32 H 10 6 14 3 7
service 33 I 2 3 10 3 2
service 34 E 4 2 8 1 8
service 35 E 9 8 9 9 5
service 36 F 4 8 15 13 1
service 37 G 2 12 8 5 3
service 38 E 2 16 11 1 2
service 39 D 8 13 8 6 4
service 40 G 3 6 9 10 1
service 41 I 6 14 1 11 8
service 42 H 7 8 3 10 3
service 43 F 9 9 9 10 9
service 44 A 8 11 8 12 11
service 45 C 2 5 5 7 18
service 46 G 6 2 7 3 2
service 47 J 5 4 3 10 16
service 48 H 8 5 2 14 8
service 49 B 2 6 7 1 1
service 50 I 1 1 9 6 13
service 51 G 4 4 11 9 6
service 52 L 3 7 2 7 5
service 53 E 12 6 6 10 12
service 54 J 10 3 9 8 10
service 55 K 8 5 5 4 8
service 56 H 7 6 3 5 7
service 57 A 3 8 12 2 6
service 58 F 1 12 17 1 9
service 59 F 6 10 8 6 14
service 60 C 5 9 2 3 8
)fx";

constexpr std::string_view kPaperScenarios = R"fx(# Benchmark ladder: each step enables two more nodes and deploys ten more services.

scenario Test I
services 1..20
nodes A B C D
budget_ms 30000
strategies greedy tabu sa ga sga-greedy sga-tabu sga-sa fullscan
seeds 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20

scenario Test II
services 1..30
nodes A B C D E F
budget_ms 60000
strategies greedy tabu sa ga sga-greedy sga-tabu sga-sa fullscan
seeds 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20

scenario Test III
services 1..40
nodes A B C D E F G H
budget_ms 120000
strategies greedy tabu sa ga sga-greedy sga-tabu sga-sa
seeds 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20

scenario Test IV
services 1..50
nodes A B C D E F G H I J
budget_ms 240000
strategies greedy tabu sa ga sga-greedy sga-tabu sga-sa
seeds 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20

scenario Test V
services 1..60
nodes A B C D E F G H I J K L
budget_ms 480000
strategies greedy tabu sa ga sga-greedy sga-tabu sga-sa
seeds 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20
)fx";

} // namespace

std::string_view paper_instance() { return kPaperInstance; }

std::string_view paper_tables_instance() { return kPaperTablesInstance; }

std::string_view paper_scenarios() { return kPaperScenarios; }

} // namespace drsop::fixtures
