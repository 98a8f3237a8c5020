from pymongo import MongoClient
from dotenv import load_dotenv
import os

load_dotenv()

MONGO_URI = os.getenv("MONGO_URI", "mongodb://localhost:27017")
DB_NAME = os.getenv("DB_NAME", "spin_isometry")
MONGO_TIMEOUT_MS = int(os.getenv("MONGO_TIMEOUT_MS", "2000"))

# Establish connection to MongoDB
client = MongoClient(MONGO_URI, serverSelectionTimeoutMS=MONGO_TIMEOUT_MS)
# Access the database
db = client[DB_NAME]

# Pointer to isometry_reports collection
isometry_reports = db["isometry_reports"]
# Pointer to table_summaries collection
table_summaries = db["table_summaries"]
# Pointer to test collection
test_collection = db["test"]
