import logging
from fastapi import FastAPI
from routes.classes_routes import classes_router
from routes.chartable_routes import chartable_router
from routes.partitions_routes import partitions_router
from routes.blocks_routes import blocks_router
from routes.isometry_routes import isometry_router
from routes.reports_routes import reports_router
from database import client
from config import configure_logging
from contextlib import asynccontextmanager

configure_logging()
logger = logging.getLogger(__name__)

@asynccontextmanager
async def lifespan(_app: FastAPI):
    """Test MongoDB connection on startup"""
    try:
        client.admin.command('ping')
        logger.info("Successfully connected to MongoDB!")
    except Exception as e:
        logger.warning(f"Failed to connect to MongoDB: {e}")

    yield

    # Close MongoDB connection on shutdown
    client.close()
    logger.info("MongoDB connection closed")

app = FastAPI(
    title="Spin Isometry API",
    description="Exact spin character tables of double covers and verification of Broue perfect isometries",
    version="1.0.0",
    lifespan=lifespan
)

# Include routers
app.include_router(classes_router, prefix="/classes", tags=["Conjugacy classes"])
app.include_router(chartable_router, prefix="/chartable", tags=["Character tables"])
app.include_router(partitions_router, prefix="/partitions", tags=["Bar cores and quotients"])
app.include_router(blocks_router, prefix="/blocks", tags=["Blocks"])
app.include_router(isometry_router, prefix="/isometry", tags=["Perfect isometries"])
app.include_router(reports_router, prefix="/reports", tags=["Report corpus"])

@app.get("/")
async def root():
    return {"message": "Welcome to the Spin Isometry API"}
