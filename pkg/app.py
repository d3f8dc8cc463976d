"""
Main Flask Application for the ladder algebra toolkit
"""
import os
import logging
from typing import Any, Dict, List, Optional, Tuple

from flask import Flask, request, jsonify
from dotenv import load_dotenv

from errors import AlgebraError, ConsistencyError, ParseError
from expr_parser import eval_text, parse_vector
from lie_core import LieElement
from modules_rep import act
from verifier import Verifier

# Load environment variables
load_dotenv()

# Configure logging
logging.basicConfig(
    level=getattr(logging, os.getenv('LADDER_LOG_LEVEL', 'INFO').upper(), logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

app = Flask(__name__)

# Configuration
PORT = int(os.getenv('PORT', 5000))
HOST = os.getenv('HOST', '0.0.0.0')
MAX_EXPR_LENGTH = int(os.getenv('LADDER_MAX_EXPR_LENGTH', 4096))
# Work caps for /verify; the CLI is not limited
MAX_TRIALS = int(os.getenv('LADDER_MAX_TRIALS', 10000))
MAX_BOUND = int(os.getenv('LADDER_MAX_BOUND', 20))
VERIFY_CAPS = {'trials': MAX_TRIALS, 'max_index': MAX_BOUND, 'max_degree': MAX_BOUND}


def _read_payload(required: List[str]) -> Tuple[Optional[Dict[str, Any]], Optional[Tuple[Any, int]]]:
    """
    Validate a JSON request body

    Returns:
        (data, None) when valid, else (None, error response)
    """
    if not request.is_json:
        logger.warning("Invalid request: Not JSON content type")
        return None, (jsonify({"error": "Request must be JSON"}), 400)

    try:
        data = request.get_json(force=False, silent=False)
    except Exception as json_error:
        logger.warning(f"Invalid JSON payload: {str(json_error)}")
        return None, (jsonify({"error": "Invalid JSON format"}), 400)

    if not isinstance(data, dict) or not data:
        logger.warning("Invalid request: Empty JSON")
        return None, (jsonify({"error": "Empty JSON payload"}), 400)

    missing = [k for k in required if k not in data]
    if missing:
        logger.warning(f"Invalid request: Missing required fields {missing}")
        return None, (jsonify({"error": f"Missing required fields: {', '.join(required)}"}), 400)

    for key in ('expr', 'vector'):
        value = data.get(key)
        if value is not None and (not isinstance(value, str) or len(value) > MAX_EXPR_LENGTH):
            logger.warning(f"Invalid request: field {key} is not a string of at most {MAX_EXPR_LENGTH} characters")
            return None, (jsonify({"error": f"Field '{key}' must be a string of at most {MAX_EXPR_LENGTH} characters"}), 400)
    return data, None


def _input_error(e: ValueError):
    body = {"error": str(e)}
    if isinstance(e, ParseError):
        body["offset"] = e.offset
    return jsonify(body), 400


@app.route('/eval', methods=['POST'])
def eval_endpoint():
    """
    Evaluate an expression to canonical form

    Expected JSON payload:
    {
        "expr": "[Z[1,0],Z[0,1]]"
    }
    """
    data, error = _read_payload(['expr'])
    if error:
        return error

    try:
        value = eval_text(data['expr'])
        logger.info(f"Evaluated expression of length {len(data['expr'])}")
        return jsonify({
            "status": "success",
            "type": type(value).__name__,
            "result": value.to_json(),
            "text": str(value)
        }), 200
    except (ParseError, AlgebraError) as e:
        logger.warning(f"Rejected expression: {str(e)}")
        return _input_error(e)
    except Exception as e:
        logger.error(f"Error processing request: {str(e)}", exc_info=True)
        return jsonify({"error": "Internal server error"}), 500


@app.route('/act', methods=['POST'])
def act_endpoint():
    """
    Act with a Lie element on a vector of the standard module

    Expected JSON payload:
    {
        "expr": "Z[2,1]",
        "vector": "t[1] + 2*t[3]"
    }
    """
    data, error = _read_payload(['expr', 'vector'])
    if error:
        return error

    try:
        x = eval_text(data['expr'])
        if not isinstance(x, LieElement):
            raise AlgebraError("Only ladder Lie algebra elements act on t[k]; wrap gl terms in phi(...)")
        result = act(x, parse_vector(data['vector']))
        return jsonify({
            "status": "success",
            "result": result.to_json(),
            "text": str(result)
        }), 200
    except (ParseError, AlgebraError) as e:
        logger.warning(f"Rejected action request: {str(e)}")
        return _input_error(e)
    except Exception as e:
        logger.error(f"Error processing request: {str(e)}", exc_info=True)
        return jsonify({"error": "Internal server error"}), 500


@app.route('/verify', methods=['POST'])
def verify_endpoint():
    """
    Run a verification suite

    Expected JSON payload:
    {
        "suite": "antisymmetry",
        "trials": 100,
        "seed": 1,
        "max_index": 6
    }
    """
    data, error = _read_payload(['suite'])
    if error:
        return error

    options = {}
    for key in ('trials', 'seed', 'max_index', 'max_degree'):
        if data.get(key) is not None:
            if not isinstance(data[key], int) or isinstance(data[key], bool):
                logger.warning(f"Invalid request: {key} must be an integer")
                return jsonify({"error": f"Field '{key}' must be an integer"}), 400
            cap = VERIFY_CAPS.get(key)
            if cap is not None and not 0 <= data[key] <= cap:
                logger.warning(f"Invalid request: {key}={data[key]} outside 0..{cap}")
                return jsonify({"error": f"Field '{key}' must be between 0 and {cap}"}), 400
            options[key] = data[key]

    try:
        reports = Verifier().run(str(data['suite']), **options)
        return jsonify({
            "status": "success",
            "pass": all(r.passed for r in reports),
            "reports": [r.to_dict() for r in reports]
        }), 200
    except KeyError as e:
        logger.warning(f"Unknown suite: {data['suite']}")
        return jsonify({"error": str(e.args[0]) if e.args else "Unknown suite"}), 404
    except (AlgebraError, ConsistencyError) as e:
        logger.warning(f"Rejected verify request: {str(e)}")
        return jsonify({"error": str(e)}), 400
    except Exception as e:
        logger.error(f"Error processing request: {str(e)}", exc_info=True)
        return jsonify({"error": "Internal server error"}), 500


@app.route('/health', methods=['GET'])
def health_check():
    """Health check endpoint"""
    return jsonify({"status": "healthy"}), 200


@app.route('/', methods=['GET'])
def index():
    """Root endpoint with basic info"""
    return jsonify({
        "name": "Ladder Lie Algebra Toolkit",
        "version": "1.0.0",
        "endpoints": {
            "/eval": "POST - Evaluate an expression",
            "/act": "POST - Act on a module vector",
            "/verify": "POST - Run a verification suite",
            "/health": "GET - Health check"
        }
    }), 200


# Gunicorn imports 'app' directly; local runs go through `python cli.py serve`
if __name__ == '__main__':
    import sys
    print("Use: gunicorn app:app --bind 0.0.0.0:$PORT  (or: python cli.py serve)", file=sys.stderr)
    sys.exit(1)
