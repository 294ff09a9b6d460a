"""
UI components for the Streamlit application.
"""

import streamlit as st
from typing import Any, Dict, Optional, Tuple

from ..config import Config, EReading, Task
from ..corpus import CORPUS


class UIComponents:
    """UI component utilities for the Streamlit app."""

    @staticmethod
    def setup_page_config():
        """Setup Streamlit page configuration."""
        st.set_page_config(
            page_title="📐 n-Angulation Verifier",
            page_icon="📐",
            layout="wide",
            initial_sidebar_state="expanded"
        )

    @staticmethod
    def render_header():
        """Render application header."""
        st.title("📐 n-Angulation Verifier")
        st.markdown("---")

    @staticmethod
    def render_sidebar() -> Tuple[str, Dict[str, Any], bool]:
        """Render sidebar configuration and return settings."""
        with st.sidebar:
            st.header("⚙️ Configuration")

            source = st.radio("Input", ["Corpus entry", "Category file"])
            settings: Dict[str, Any] = {'corpus': None, 'text': None, 'file_name': None}
            if source == "Corpus entry":
                settings['corpus'] = st.selectbox("📚 Corpus entry", sorted(CORPUS))
            else:
                upload = st.file_uploader("📄 Category file", type=["cat", "txt"])
                if upload is not None:
                    settings['text'] = upload.getvalue().decode("utf-8")
                    settings['file_name'] = upload.name

            task = st.selectbox("🧪 Task", list(Task.ALL))
            n = st.number_input("n (0 keeps the file's value)", min_value=0, value=0, step=1)
            settings['n'] = int(n) or None

            settings.update(UIComponents._render_budget_config())
            if task == Task.VERIFY_FROBENIUS:
                settings['e_reading'] = st.selectbox("E reading", [EReading.EXACT, EReading.ALL])

            run_button = st.button("🚀 Run Job", type="primary")

            return task, settings, run_button

    @staticmethod
    def _render_budget_config() -> Dict[str, Any]:
        """Render budget settings."""
        st.subheader("🎯 Budget")
        return {
            'cap_objects': int(st.number_input("Object cap", min_value=1, value=Config.DEFAULT_CAP_OBJECTS)),
            'cap_solutions': int(st.number_input("Solution cap", min_value=1, value=Config.DEFAULT_CAP_SOLUTIONS)),
            'cap_instances': int(st.number_input("Instance cap", min_value=1, value=Config.DEFAULT_CAP_INSTANCES)),
            'seed': int(st.number_input("Seed", min_value=0, value=Config.DEFAULT_SEED)),
            'exhaustive': st.checkbox("Caps cover the search space", value=False),
        }

    @staticmethod
    def validate_input(settings: Dict[str, Any]) -> bool:
        """Validate input selection."""
        if not settings.get('corpus') and not settings.get('text'):
            st.error("⚠️ Please choose a corpus entry or upload a category file!")
            return False
        return True

    @staticmethod
    def render_instructions():
        """Render usage instructions."""
        st.markdown("""
        ## 🚀 How to Use

        1. **Choose Input**: a built-in corpus entry or an uploaded category file
        2. **Choose Task**:
           - **validate-category**: check the presentation, Σ and the Hom-exactness screen
           - **check-axioms**: run (N1) to (N4′) on the angle class
           - **validate-mutation-pair**: search fixed angles for (Z, D)
           - **build-quotient**: build Z/[D] and the functor T
           - **verify-theorem**: check that the quotient with its standard angles is n-angulated
           - **verify-frobenius**: compute injectives of a Frobenius Z and verify Z/[I]
        3. **Set Budget**: object cap, solution cap, instance cap and seed
        4. **Run**: click "Run Job"
        5. **Download**: JSON, CSV or TXT reports

        Verdicts are three-valued: a check that runs out of budget is inconclusive, never a pass.
        """)
