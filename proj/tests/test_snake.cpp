#include <gtest/gtest.h>

#include "snakechar/snake.hpp"

using namespace snakechar;

namespace {
std::vector<SnakePoint> P(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<SnakePoint> r;
  for (auto [i, k] : xs) r.push_back({i, k});
  return r;
}
}  // namespace

TEST(Lattice, MembershipAndIota) {
  CartanData a3 = make_cartan(LieType::A, 3);
  EXPECT_TRUE(in_lattice(a3, {2, 5}));
  EXPECT_TRUE(in_lattice(a3, {2, 4}));
  EXPECT_FALSE(in_lattice(a3, {0, 1}));
  EXPECT_FALSE(in_lattice(a3, {4, 1}));
  EXPECT_EQ(iota(a3, {2, -4}), (std::pair{2, -4}));

  CartanData b3 = make_cartan(LieType::B, 3);
  EXPECT_TRUE(in_lattice(b3, {3, 0}));
  EXPECT_FALSE(in_lattice(b3, {3, 1}));
  EXPECT_TRUE(in_lattice(b3, {2, 1}));
  EXPECT_FALSE(in_lattice(b3, {2, 0}));
  EXPECT_EQ(iota(b3, {3, 4}), (std::pair{5, 4}));
  EXPECT_EQ(iota(b3, {2, 1}), (std::pair{6, 1}));
  EXPECT_EQ(iota(b3, {2, 3}), (std::pair{4, 3}));
  EXPECT_EQ(iota(b3, {1, 1}), (std::pair{2, 1}));
  EXPECT_EQ(iota(b3, {1, 3}), (std::pair{8, 3}));
  EXPECT_THROW(iota(b3, {3, 1}), std::invalid_argument);
}

TEST(Position, TypeA) {
  CartanData cd = make_cartan(LieType::A, 3);
  auto c1 = position_class(cd, {3, -3}, {3, -1});
  EXPECT_TRUE(c1.snake && c1.minimal && c1.prime);
  auto c2 = position_class(cd, {2, 0}, {2, 4});
  EXPECT_TRUE(c2.snake && !c2.minimal && c2.prime);
  auto c3 = position_class(cd, {2, 0}, {2, 6});
  EXPECT_TRUE(c3.snake && !c3.prime);
  auto c4 = position_class(cd, {1, 0}, {3, 2});
  EXPECT_FALSE(c4.snake);
  auto c5 = position_class(cd, {1, 0}, {3, 3});
  EXPECT_FALSE(c5.snake);
}

TEST(Position, TypeB) {
  CartanData cd = make_cartan(LieType::B, 4);
  auto c1 = position_class(cd, {4, -20}, {4, -18});
  EXPECT_TRUE(c1.snake && c1.minimal && c1.prime);
  auto c2 = position_class(cd, {4, -18}, {2, -11});
  EXPECT_TRUE(c2.snake && c2.minimal && c2.prime);
  auto c3 = position_class(cd, {2, -11}, {3, -1});
  EXPECT_TRUE(c3.snake && !c3.minimal && c3.prime);
  auto c4 = position_class(cd, {2, -13}, {3, 1});
  EXPECT_TRUE(c4.snake && !c4.prime);
  auto c5 = position_class(cd, {3, -9}, {3, -1});
  EXPECT_TRUE(c5.snake && !c5.minimal && c5.prime);
  auto c6 = position_class(cd, {4, -20}, {4, -16});
  EXPECT_FALSE(c6.snake);
  auto c7 = position_class(cd, {2, -13}, {4, -6});
  EXPECT_TRUE(c7.snake && c7.minimal && c7.prime);
}

TEST(Snakes, BuildAndFactor) {
  CartanData cd = make_cartan(LieType::A, 3);
  EXPECT_TRUE(is_snake(cd, P({{3, -5}, {3, -3}, {2, 0}})));
  EXPECT_FALSE(is_snake(cd, P({{1, 0}, {3, 2}})));

  Snake s = make_snake(cd, P({{2, 0}, {2, 2}, {2, 8}}));
  EXPECT_FALSE(is_prime_snake(cd, s));
  auto f = prime_factorize(cd, s);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].p, P({{2, 0}, {2, 2}}));
  EXPECT_EQ(f[1].p, P({{2, 8}}));
  EXPECT_TRUE(is_minimal_snake(cd, f[0]));

  EXPECT_THROW(make_snake(cd, P({{1, 0}, {3, 2}})), std::invalid_argument);
}

TEST(Specs, RoundTripTypeA) {
  CartanData a5 = make_cartan(LieType::A, 5);
  SnakeSpec s1{-12, {{1, 2, 0}, {1, 4, 0}, {2, 5, 0}, {1, 4, 0}}};
  EXPECT_EQ(spec_to_points(a5, s1), P({{2, -12}, {4, -8}, {5, -5}, {5, -3}, {4, 0}}));
  EXPECT_EQ(snake_to_spec(a5, spec_to_snake(a5, s1)), s1);

  CartanData a4 = make_cartan(LieType::A, 4);
  SnakeSpec s2{-16, {{1, 2, 0}, {2, 3, 0}, {1, 2, 1}, {1, 2, 0}, {1, 3, 0}}};
  EXPECT_EQ(spec_to_points(a4, s2),
            P({{2, -16}, {3, -13}, {3, -11}, {2, -8}, {2, -4}, {3, -1}}));
  EXPECT_EQ(snake_to_spec(a4, spec_to_snake(a4, s2)), s2);

  SnakeSpec s3{-30, {{1, 2, 1}, {1, 2, 0}, {2, 1, 0}, {1, 2, 0}, {1, 3, 0},
                     {2, 2, 1}, {1, 2, 0}, {2, 4, 0}}};
  EXPECT_EQ(spec_to_points(a4, s3),
            P({{2, -30}, {2, -26}, {1, -23}, {1, -21}, {2, -18}, {3, -15},
               {2, -12}, {2, -10}, {2, -6}, {4, -2}, {4, 0}}));
  EXPECT_EQ(snake_to_spec(a4, spec_to_snake(a4, s3)), s3);
}

TEST(Specs, RoundTripTypeB) {
  CartanData b3 = make_cartan(LieType::B, 3);
  SnakeSpec s1{-35, {{1, 1, 0}, {1, 2, 1}, {1, 2, 0}, {1, 3, 1}, {1, 3, 0}, {1, 2, 0}}};
  EXPECT_EQ(spec_to_points(b3, s1),
            P({{1, -35}, {2, -29}, {2, -21}, {3, -16}, {3, -10}, {2, -5}}));
  EXPECT_EQ(snake_to_spec(b3, spec_to_snake(b3, s1)), s1);

  SnakeSpec s2{-43, {{1, 2, 1}, {2, 2, 0}, {1, 1, 0}, {1, 3, 2}, {1, 3, 1}, {2, 3, 0}}};
  EXPECT_EQ(spec_to_points(b3, s2),
            P({{2, -43}, {2, -35}, {2, -31}, {1, -25}, {3, -18}, {3, -8}, {3, -2}, {3, 0}}));
  EXPECT_EQ(snake_to_spec(b3, spec_to_snake(b3, s2)), s2);

  // Prime KR snakes at the spin node step by 2.
  SnakeSpec s3{-6, {{3, 3, 0}}};
  EXPECT_EQ(spec_to_points(b3, s3), P({{3, -6}, {3, -4}, {3, -2}}));
  EXPECT_TRUE(is_prime_snake(b3, spec_to_snake(b3, s3)));
}

TEST(Specs, BadInputs) {
  CartanData cd = make_cartan(LieType::A, 3);
  EXPECT_THROW(spec_to_points(cd, SnakeSpec{0, {{1, 5, 0}}}), std::invalid_argument);
  EXPECT_THROW(spec_to_points(cd, SnakeSpec{0, {{-1, 2, 0}}}), std::invalid_argument);
  EXPECT_THROW(snake_to_spec(cd, Snake{}), std::invalid_argument);
}

TEST(Neighbors, TypeA) {
  CartanData cd = make_cartan(LieType::A, 3);
  auto [x1, y1] = neighboring_points(cd, {2, -4}, {2, -2});
  EXPECT_EQ(x1, P({{1, -3}}));
  EXPECT_EQ(y1, P({{3, -3}}));

  auto [x2, y2] = neighboring_points(cd, {2, -2}, {2, 0});
  EXPECT_EQ(x2, P({{1, -1}}));
  EXPECT_EQ(y2, P({{3, -1}}));

  // Minimal cross-node pair: both sides empty.
  auto [x3, y3] = neighboring_points(cd, {1, -4}, {3, 0});
  EXPECT_TRUE(x3.empty());
  EXPECT_TRUE(y3.empty());

  EXPECT_THROW(neighboring_points(cd, {2, 0}, {2, 6}), std::invalid_argument);
}

TEST(Neighbors, TypeB) {
  CartanData cd = make_cartan(LieType::B, 2);
  auto [x1, y1] = neighboring_points(cd, {1, 1}, {1, 5});
  EXPECT_EQ(x1, P({{2, 2}, {2, 4}}));
  EXPECT_TRUE(y1.empty());

  auto [x2, y2] = neighboring_points(cd, {2, 0}, {2, 2});
  EXPECT_TRUE(x2.empty());
  EXPECT_EQ(y2, P({{1, 1}}));

  auto [x3, y3] = neighboring_points(cd, {2, 0}, {1, 5});
  EXPECT_EQ(x3, P({{2, 4}}));
  EXPECT_TRUE(y3.empty());

  auto [x4, y4] = neighboring_points(cd, {1, 1}, {2, 6});
  EXPECT_EQ(x4, P({{2, 2}}));
  EXPECT_TRUE(y4.empty());
}

TEST(Snakes, TextAndJson) {
  CartanData cd = make_cartan(LieType::A, 3);
  Snake s = parse_snake(cd, "3_-5 3_-3 2_0");
  EXPECT_EQ(s.p, P({{3, -5}, {3, -3}, {2, 0}}));
  EXPECT_EQ(format_snake(s), "3_-5 3_-3 2_0");
  EXPECT_EQ(snake_top_monomial(s), parse_monomial("3_-5 3_-3 2_0"));
  EXPECT_THROW(parse_snake(cd, "3_-5^-1 2_0"), std::invalid_argument);

  SnakeSpec spec = snake_to_spec(cd, s);
  EXPECT_EQ(spec_from_json(spec_to_json(spec)), spec);
  EXPECT_EQ(spec_to_json(spec)["t"], -5);
}
