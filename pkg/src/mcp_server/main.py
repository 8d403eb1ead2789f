"""
MCP Server using fastmcp to expose the interpolation workbench as tools.

Tools:
1. compute_uniform_interpolant(ontology, keep, policy): forget every name outside `keep`.
2. check_subsumption(ontology, lhs, rhs): decide lhs [= rhs.
3. compute_craig_interpolant(ontology, lhs, rhs, sigma): explain a subsumption over `sigma`.
4. forget_atoms(program, forget): forget atoms from an answer-set program.
"""

import logging

from fastmcp import FastMCP

from src.config import Config as WorkbenchConfig
from src.mcp_server.config import Config
from src.mcp_server.tool.craig_interpolant_tool import compute_craig_interpolant
from src.mcp_server.tool.forget_atoms_tool import forget_atoms
from src.mcp_server.tool.subsumption_tool import check_subsumption
from src.mcp_server.tool.uniform_interpolant_tool import compute_uniform_interpolant

logger = logging.getLogger(__name__)

# Create the MCP server
mcp = FastMCP(Config.SERVER_NAME)

# Register tools
mcp.tool(compute_uniform_interpolant)
mcp.tool(check_subsumption)
mcp.tool(compute_craig_interpolant)
mcp.tool(forget_atoms)


def main():
    """
    Main function to run the fastmcp server.
    """
    logging.basicConfig(
        level=WorkbenchConfig.LOG_LEVEL,
        format="%(levelname)s | %(name)s | %(message)s",
        handlers=[logging.StreamHandler()]
    )
    logger.info("Starting MCP server with tools: compute_uniform_interpolant, check_subsumption, "
                "compute_craig_interpolant, forget_atoms")

    # Run the server
    mcp.run()


if __name__ == "__main__":
    main()
