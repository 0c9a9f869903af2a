#include <gtest/gtest.h>

#include <sstream>

#include "hadwiger/graph_io.hpp"
#include "hadwiger/named_graphs.hpp"

using namespace hadwiger;

namespace {

Graph parse(const std::string& text)
{
    std::istringstream in(text);
    return read_graph(in);
}

std::size_t error_line(const std::string& text)
{
    try {
        parse(text);
    } catch (const parse_error& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST(GraphIo, EdgeListRoundTrip)
{
    const Graph p = named::petersen();
    const std::string text = to_edge_list(p);
    EXPECT_EQ(parse(text), p);
    EXPECT_EQ(to_edge_list(parse(text)), text);
}

TEST(GraphIo, WriterIsSortedAndExact)
{
    Graph g(4);
    g.add_edge(3, 1);
    g.add_edge(2, 0);
    g.add_edge(1, 0);
    EXPECT_EQ(to_edge_list(g), "4 3\n0 1\n0 2\n1 3\n");
}

TEST(GraphIo, WriterRenumbersSparseIds)
{
    const auto [h, z] = contract_set(named::path(4), VertexSet{1, 2});
    EXPECT_EQ(to_edge_list(h), "3 2\n0 1\n1 2\n");
}

TEST(GraphIo, DimacsIsOneBased)
{
    const Graph g = parse("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\ne 2 1\n");
    EXPECT_EQ(g, named::complete(3));
}

TEST(GraphIo, CommentsAndBlankLines)
{
    EXPECT_EQ(parse("# header\n\n2 1\n# edge\n0 1\n"), named::complete(2));
}

TEST(GraphIo, ErrorsCarryLineNumbers)
{
    EXPECT_EQ(error_line("3 2\n0 1\n1 x\n"), 3u);
    EXPECT_EQ(error_line("3 1\n0 3\n"), 2u);
    EXPECT_EQ(error_line("3 1\n1 1\n"), 2u);
    EXPECT_EQ(error_line("3 2\n0 1\n0 1\n"), 3u);
    EXPECT_EQ(error_line("3 1\n0 1\n1 2\n"), 3u);
    EXPECT_EQ(error_line("3\n"), 1u);
    EXPECT_EQ(error_line("p edge 3 1\ne 0 1\n"), 2u);
    EXPECT_EQ(error_line("p edge 2 1\nx 1 2\n"), 2u);
    EXPECT_EQ(error_line("999 0\n"), 1u);
    EXPECT_THROW(parse(""), parse_error);
    EXPECT_THROW(parse("3 2\n0 1\n"), parse_error);
}
