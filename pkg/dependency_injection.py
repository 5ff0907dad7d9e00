from config import Config
from controllers.analysis_controller import AnalysisController
from controllers.qec_controller import QecController
from repositories.file_repository import FileReportRepository, FileVectorRepository, JsonRunConfigRepository
from services.distance_optimizer import DistanceOptimizer
from services.kraus_oracle import KrausOracle
from services.noise_service import NoiseService
from services.observable_service import ObservableService
from services.qec_service import QecService
from services.run_service import RunService
from services.state_service import StateService


class DependencyContainer:
    """Dependency Injection Container following SOLID Principles"""

    def __init__(self):
        self._vector_repository = None
        self._config_repository = None
        self._report_repository = None
        self._state_service = None
        self._observable_service = None
        self._noise_service = None
        self._kraus_oracle = None
        self._qec_service = None
        self._run_service = None
        self._analysis_controller = None
        self._qec_controller = None

    def get_vector_repository(self):
        """Get state / observable file repository"""
        if self._vector_repository is None:
            self._vector_repository = FileVectorRepository()
        return self._vector_repository

    def get_config_repository(self):
        """Get run-config repository"""
        if self._config_repository is None:
            self._config_repository = JsonRunConfigRepository()
        return self._config_repository

    def get_report_repository(self):
        """Get report sink"""
        if self._report_repository is None:
            self._report_repository = FileReportRepository()
        return self._report_repository

    def get_state_service(self):
        if self._state_service is None:
            self._state_service = StateService(self.get_vector_repository())
        return self._state_service

    def get_observable_service(self):
        if self._observable_service is None:
            self._observable_service = ObservableService(self.get_vector_repository())
        return self._observable_service

    def get_noise_service(self):
        if self._noise_service is None:
            self._noise_service = NoiseService(self.get_state_service())
        return self._noise_service

    def get_kraus_oracle(self):
        if self._kraus_oracle is None:
            self._kraus_oracle = KrausOracle(Config.ORACLE_MAX_QUBITS)
        return self._kraus_oracle

    def get_qec_service(self):
        if self._qec_service is None:
            self._qec_service = QecService(DistanceOptimizer(), workers=Config.SWEEP_WORKERS)
        return self._qec_service

    def get_run_service(self):
        """Get config-to-objects resolver"""
        if self._run_service is None:
            self._run_service = RunService(
                self.get_state_service(),
                self.get_observable_service(),
                self.get_noise_service()
            )
        return self._run_service

    def get_analysis_controller(self):
        """Get analysis controller"""
        if self._analysis_controller is None:
            self._analysis_controller = AnalysisController(
                self.get_run_service(),
                self.get_state_service(),
                self.get_observable_service(),
                self.get_noise_service(),
                self.get_kraus_oracle()
            )
        return self._analysis_controller

    def get_qec_controller(self):
        """Get QEC controller"""
        if self._qec_controller is None:
            self._qec_controller = QecController(self.get_run_service(), self.get_qec_service())
        return self._qec_controller


# Global container instance
container = DependencyContainer()
