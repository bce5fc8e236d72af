#include <gtest/gtest.h>

#include "cge/errors.hpp"
#include "cge/io.hpp"

using namespace cge;

TEST(ParseInstance, SingleEdge) {
    auto doc = parse_instance("cge 1\nnodes 2\ninit 0\nrobots 1\nedge 0 1\n");
    ASSERT_EQ(doc.kind, InstanceDocument::Kind::Cge);
    EXPECT_EQ(doc.cge.graph.size(), 1);
    EXPECT_EQ(doc.cge.k, 1);
    EXPECT_FALSE(doc.cge.budget.has_value());
}

TEST(ParseInstance, Binpack) {
    auto doc = parse_instance("binpack 1\ncapacity 2\nbins 2\nexact 1\nitem 2\nitem 2\n");
    ASSERT_EQ(doc.kind, InstanceDocument::Kind::Binpack);
    EXPECT_EQ(doc.binpack.sizes, (std::vector<int>{2, 2}));
    EXPECT_TRUE(doc.binpack.exact);
}

TEST(ParseInstance, Errors) {
    try {
        parse_instance("cge 1\nnodes 2\nrobots 1\nedge 0 1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("init"), std::string::npos);
    }
    try {
        parse_instance("cge 1\nnodes 3\ninit 0\nrobots 1\nedge 0 1\nedge 1 0\nedge 1 2\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 6);
    }
    EXPECT_THROW(parse_instance("cge 1\nnodes 3\ninit 0\nrobots 1\nedge 0 1\n"), NotConnected);
    EXPECT_THROW(parse_instance("cge 1\nnodes 2\ninit 0\nrobots 1\nedge 1 1\n"), SelfLoop);
    EXPECT_THROW(parse_instance("cge 2\n"), ParseError);
    EXPECT_THROW(parse_instance("cge 1\nnodes two\n"), ParseError);
    EXPECT_THROW(parse_instance("cge 1\nnodes 2\ninit 0\nrobots 1\nedge 0 1\nitem 3\n"), ParseError);
}

TEST(ParseInstance, CommentsAndRoundTrip) {
    std::string text = "# demo\ncge 1\nnodes 3 # three\ninit 1\nrobots 2\nbudget 4\nedge 2 1\nedge 0 1\n";
    auto doc = parse_instance(text);
    auto once = format_instance(doc.cge);
    EXPECT_EQ(format_instance(parse_instance(once).cge), once);
    EXPECT_EQ(once, "cge 1\nnodes 3\ninit 1\nrobots 2\nbudget 4\nedge 0 1\nedge 1 2\n");

    BinPackingInstance bp{{3, 1}, 2, 2, false};
    EXPECT_EQ(format_binpacking(parse_instance(format_binpacking(bp)).binpack), format_binpacking(bp));
}

TEST(FormatSolution, Shapes) {
    auto tri = Solution::from_cycles({{{0, 1, 2, 0}}});
    EXPECT_EQ(format_solution(tri), "value 3\nrobot 1: 0 1 2 0\n");
    auto two = Solution::from_cycles({{{0, 1, 0}}, {{0}}});
    EXPECT_EQ(format_solution(two), "value 2\nrobot 1: 0 1 0\nrobot 2: 0\n");
    auto back = parse_solution(format_solution(two));
    EXPECT_EQ(back.value, 2);
    EXPECT_EQ(back.cycles[1].walk, (std::vector<Vertex>{0}));
    EXPECT_THROW(parse_solution("robot 1: 0 1 0\n"), ParseError);
}
